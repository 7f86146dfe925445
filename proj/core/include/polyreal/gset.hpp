#pragma once

#include <memory>
#include <vector>

#include "polyreal/group.hpp"

namespace polyreal {

/// A transitive right G-set, stored through the orbit map x -> alpha^x of its
/// base point alpha. Point p is reached from alpha by representative(p), the
/// smallest element index mapping alpha to p.
class GSet {
 public:
  /// Right cosets Hx; point 0 is H itself and points are numbered by the
  /// smallest element index they contain.
  static GSet cosets(std::shared_ptr<const Group> g, const Subgroup& h);
  /// The orbit of `alpha` under the natural action on points. Orbit points are
  /// relabelled 0..n-1 in increasing order of their original labels.
  static GSet orbit(std::shared_ptr<const Group> g, Point alpha);

  const Group& group() const noexcept { return *group_; }
  std::shared_ptr<const Group> shared_group() const noexcept { return group_; }
  std::size_t size() const noexcept { return rep_.size(); }
  Point base() const noexcept { return base_; }
  const Subgroup& stabilizer() const noexcept { return stabilizer_; }

  /// alpha^x.
  Point point_of(Index x) const { return point_of_[x]; }
  Index representative(Point p) const { return rep_[p]; }
  /// p^x.
  Point act(Point p, Index x) const { return point_of_[group_->multiply(rep_[p], x)]; }
  /// Original point labels, for orbit G-sets; empty for coset G-sets.
  const std::vector<Point>& labels() const noexcept { return labels_; }

 private:
  GSet(std::shared_ptr<const Group> g, std::vector<Point> point_of, Point base, std::vector<Point> labels);

  std::shared_ptr<const Group> group_;
  std::vector<Point> point_of_;
  std::vector<Index> rep_;
  Point base_;
  Subgroup stabilizer_;
  std::vector<Point> labels_;
};

}  // namespace polyreal
