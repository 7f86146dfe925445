#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polyreal/permutation.hpp"

namespace polyreal {

using Index = std::uint32_t;

/// A fully enumerated finite permutation group.
///
/// Elements are numbered breadth-first from the identity (index 0), trying
/// generators in the order given, so the numbering is a pure function of the
/// generator list. Element lookup goes through an open-addressing table keyed
/// by image vectors; there is no full multiplication table.
class Group {
 public:
  static constexpr std::size_t kDefaultCap = 200000;

  /// Closure of `generators` under composition. Throws CapExceeded if the
  /// closure grows past `cap` elements, DegreeMismatch if the generators act
  /// on different point counts.
  static Group enumerate(std::span<const Permutation> generators,
                         std::size_t cap = kDefaultCap);

  std::size_t order() const noexcept { return order_; }
  std::size_t degree() const noexcept { return degree_; }

  static constexpr Index identity() noexcept { return 0; }

  std::span<const Point> images(Index x) const noexcept {
    return {data_.data() + static_cast<std::size_t>(x) * degree_, degree_};
  }
  Permutation element(Index x) const;

  Index inverse(Index x) const noexcept { return inverse_[x]; }
  /// Index of x*y (apply x, then y).
  Index multiply(Index x, Index y) const;
  Index power(Index x, long long k) const;
  /// Least n >= 1 with x^n = 1, from the cycle type.
  std::uint32_t element_order(Index x) const;

  std::optional<Index> find(std::span<const Point> images) const;
  /// Throws InvalidArgument when p is not an element.
  Index index_of(const Permutation& p) const;

  const std::vector<Index>& generators() const noexcept { return generators_; }

  /// Hash of degree and the element list in enumeration order.
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

 private:
  Group() = default;

  void insert_slot(Index x);
  void rehash(std::size_t capacity);
  std::uint64_t hash_images(std::span<const Point> images) const noexcept;

  std::size_t degree_ = 0;
  std::size_t order_ = 0;
  std::vector<Point> data_;
  std::vector<Index> inverse_;
  std::vector<Index> generators_;
  std::vector<Index> slots_;
  std::size_t mask_ = 0;
  std::uint64_t fingerprint_ = 0;
};

/// A subgroup given by its sorted member indices inside a parent group.
class Subgroup {
 public:
  Subgroup(std::size_t parent_order, std::vector<Index> members, std::vector<Index> generators);

  std::size_t order() const noexcept { return members_.size(); }
  std::size_t parent_order() const noexcept { return mask_.size(); }
  const std::vector<Index>& members() const noexcept { return members_; }
  const std::vector<Index>& generators() const noexcept { return generators_; }
  bool contains(Index x) const noexcept { return x < mask_.size() && mask_[x]; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members_ == b.members_ && a.mask_.size() == b.mask_.size();
  }

 private:
  std::vector<Index> members_;
  std::vector<Index> generators_;
  std::vector<bool> mask_;
};

Group enumerate_group(std::span<const Permutation> generators,
                      std::size_t cap = Group::kDefaultCap);

/// Closure of `generators` inside g. An empty list gives the trivial subgroup.
Subgroup subgroup_generated(const Group& g, std::span<const Index> generators);
Subgroup whole_group(const Group& g);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
/// The subgroup of elements x with a^x = a for the natural action on points.
Subgroup point_stabilizer(const Group& g, Point a);

std::uint32_t element_order(const Group& g, Index x);

/// Conjugacy classes with class-level inverse and power maps.
///
/// Classes are sorted by size, then by smallest member index; the
/// representative of a class is its smallest member, so class 0 is {1}.
class ConjugacyClasses {
 public:
  explicit ConjugacyClasses(const Group& g);

  std::size_t size() const noexcept { return members_.size(); }
  std::size_t group_order() const noexcept { return class_of_.size(); }

  const std::vector<Index>& members(std::size_t c) const { return members_[c]; }
  Index representative(std::size_t c) const { return members_[c].front(); }
  std::size_t class_size(std::size_t c) const { return members_[c].size(); }
  std::size_t centralizer_order(std::size_t c) const {
    return class_of_.size() / members_[c].size();
  }
  std::size_t class_of(Index x) const { return class_of_[x]; }
  std::size_t inverse_class(std::size_t c) const { return inverse_class_[c]; }
  std::uint32_t element_order(std::size_t c) const {
    return static_cast<std::uint32_t>(powers_[c].size());
  }
  /// Class of representative(c)^k.
  std::size_t power_class(std::size_t c, long long k) const;
  std::vector<std::size_t> power_map(long long k) const;
  /// Least common multiple of the element orders.
  std::uint64_t exponent() const noexcept { return exponent_; }

 private:
  std::vector<std::vector<Index>> members_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> inverse_class_;
  std::vector<std::vector<std::size_t>> powers_;
  std::uint64_t exponent_ = 1;
};

ConjugacyClasses conjugacy_classes(const Group& g);

struct DoubleCoset {
  Index representative;
  std::vector<Index> members;
  std::size_t size() const noexcept { return members.size(); }
};

/// Partition of g into double cosets h x k, ordered by smallest member.
std::vector<DoubleCoset> double_cosets(const Group& g, const Subgroup& h, const Subgroup& k);

}  // namespace polyreal
