#include "polyreal/gset.hpp"

#include <algorithm>
#include <limits>

#include "polyreal/error.hpp"

namespace polyreal {

namespace {

constexpr Point kNone = std::numeric_limits<Point>::max();

Subgroup stabilizer_of(const Group& g, const std::vector<Point>& point_of, Point base) {
  std::vector<Index> members;
  for (Index x = 0; x < g.order(); ++x) {
    if (point_of[x] == base) members.push_back(x);
  }
  return Subgroup(g.order(), std::move(members), {});
}

}  // namespace

GSet::GSet(std::shared_ptr<const Group> g, std::vector<Point> point_of, Point base, std::vector<Point> labels)
    : group_(std::move(g)),
      point_of_(std::move(point_of)),
      base_(base),
      stabilizer_(stabilizer_of(*group_, point_of_, base)),
      labels_(std::move(labels)) {
  Point n = 0;
  for (Point p : point_of_) n = std::max(n, p + 1);
  rep_.assign(n, std::numeric_limits<Index>::max());
  for (Index x = 0; x < group_->order(); ++x) {
    if (rep_[point_of_[x]] == std::numeric_limits<Index>::max()) rep_[point_of_[x]] = x;
  }
}

GSet GSet::cosets(std::shared_ptr<const Group> g, const Subgroup& h) {
  if (h.parent_order() != g->order()) {
    throw Error(ErrorCode::InvalidArgument, "subgroup belongs to a different group");
  }
  std::vector<Point> point_of(g->order(), kNone);
  Point next = 0;
  for (Index x = 0; x < g->order(); ++x) {
    if (point_of[x] != kNone) continue;
    for (Index y : h.members()) point_of[g->multiply(y, x)] = next;
    ++next;
  }
  return GSet(std::move(g), std::move(point_of), 0, {});
}

GSet GSet::orbit(std::shared_ptr<const Group> g, Point alpha) {
  if (alpha >= g->degree()) throw Error(ErrorCode::InvalidArgument, "base point out of range");
  std::vector<bool> in_orbit(g->degree(), false);
  for (Index x = 0; x < g->order(); ++x) in_orbit[g->images(x)[alpha]] = true;
  std::vector<Point> labels;
  std::vector<Point> relabel(g->degree(), kNone);
  for (Point p = 0; p < g->degree(); ++p) {
    if (in_orbit[p]) {
      relabel[p] = static_cast<Point>(labels.size());
      labels.push_back(p);
    }
  }
  std::vector<Point> point_of(g->order());
  for (Index x = 0; x < g->order(); ++x) point_of[x] = relabel[g->images(x)[alpha]];
  const Point base = relabel[alpha];
  return GSet(std::move(g), std::move(point_of), base, std::move(labels));
}

}  // namespace polyreal
