#include "polyreal/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "polyreal/error.hpp"

namespace polyreal {

namespace {

constexpr Index kEmpty = ~Index{0};

std::uint64_t mix(std::uint64_t h, std::uint64_t v) noexcept {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// Images of x^k computed from the cycle structure.
void power_images(std::span<const Point> x, long long k, std::vector<Point>& out) {
  const std::size_t n = x.size();
  out.assign(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<Point> cycle;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    cycle.clear();
    Point p = static_cast<Point>(start);
    while (!seen[p]) {
      seen[p] = true;
      cycle.push_back(p);
      p = x[p];
    }
    const long long len = static_cast<long long>(cycle.size());
    const long long shift = ((k % len) + len) % len;
    for (long long i = 0; i < len; ++i) {
      out[cycle[static_cast<std::size_t>(i)]] = cycle[static_cast<std::size_t>((i + shift) % len)];
    }
  }
}

}  // namespace

std::uint64_t Group::hash_images(std::span<const Point> images) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Point p : images) {
    h ^= p;
    h *= 0x100000001b3ULL;
  }
  return h ^ (h >> 29);
}

void Group::rehash(std::size_t capacity) {
  slots_.assign(capacity, kEmpty);
  mask_ = capacity - 1;
  for (Index x = 0; x < order_; ++x) insert_slot(x);
}

void Group::insert_slot(Index x) {
  std::size_t pos = hash_images(images(x)) & mask_;
  while (slots_[pos] != kEmpty) pos = (pos + 1) & mask_;
  slots_[pos] = x;
}

std::optional<Index> Group::find(std::span<const Point> imgs) const {
  if (imgs.size() != degree_) return std::nullopt;
  std::size_t pos = hash_images(imgs) & mask_;
  while (slots_[pos] != kEmpty) {
    Index x = slots_[pos];
    auto cand = images(x);
    if (std::equal(cand.begin(), cand.end(), imgs.begin())) return x;
    pos = (pos + 1) & mask_;
  }
  return std::nullopt;
}

Group Group::enumerate(std::span<const Permutation> generators, std::size_t cap) {
  if (cap < 1) throw Error(ErrorCode::InvalidArgument, "cap must be positive");
  Group g;
  g.degree_ = generators.empty() ? 0 : generators.front().degree();
  for (const auto& gen : generators) {
    if (gen.degree() != g.degree_) {
      throw Error(ErrorCode::DegreeMismatch, "generators act on different point counts");
    }
  }
  g.rehash(64);
  auto append = [&g](std::span<const Point> imgs) {
    g.data_.insert(g.data_.end(), imgs.begin(), imgs.end());
    const Index x = static_cast<Index>(g.order_++);
    if (2 * g.order_ > g.slots_.size()) {
      g.rehash(2 * g.slots_.size());
    } else {
      g.insert_slot(x);
    }
    return x;
  };
  const Permutation id = Permutation::identity(g.degree_);
  append(id.images());

  std::vector<Point> buffer(g.degree_);
  for (Index x = 0; x < g.order_; ++x) {
    for (const auto& gen : generators) {
      auto xi = g.images(x);
      for (std::size_t i = 0; i < g.degree_; ++i) buffer[i] = gen[xi[i]];
      if (!g.find(buffer)) {
        if (g.order_ >= cap) {
          throw Error(ErrorCode::CapExceeded,
                      "group closure exceeds " + std::to_string(cap) + " elements");
        }
        append(buffer);
      }
    }
  }

  for (const auto& gen : generators) g.generators_.push_back(*g.find(gen.images()));

  g.inverse_.resize(g.order_);
  for (Index x = 0; x < g.order_; ++x) {
    auto xi = g.images(x);
    for (std::size_t i = 0; i < g.degree_; ++i) buffer[xi[i]] = static_cast<Point>(i);
    g.inverse_[x] = *g.find(buffer);
  }

  std::uint64_t h = mix(0, g.degree_);
  h = mix(h, g.order_);
  for (Point p : g.data_) h = mix(h, p);
  g.fingerprint_ = h;
  return g;
}

Permutation Group::element(Index x) const {
  auto imgs = images(x);
  return Permutation(std::vector<Point>(imgs.begin(), imgs.end()));
}

Index Group::multiply(Index x, Index y) const {
  thread_local std::vector<Point> buffer;
  buffer.resize(degree_);
  auto xi = images(x);
  auto yi = images(y);
  for (std::size_t i = 0; i < degree_; ++i) buffer[i] = yi[xi[i]];
  auto found = find(buffer);
  if (!found) throw Error(ErrorCode::InvalidArgument, "product left the group");
  return *found;
}

Index Group::power(Index x, long long k) const {
  thread_local std::vector<Point> buffer;
  power_images(images(x), k, buffer);
  return *find(buffer);
}

std::uint32_t Group::element_order(Index x) const {
  auto xi = images(x);
  std::vector<bool> seen(degree_, false);
  std::uint64_t result = 1;
  for (std::size_t start = 0; start < degree_; ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    Point p = static_cast<Point>(start);
    while (!seen[p]) {
      seen[p] = true;
      p = xi[p];
      ++len;
    }
    result = std::lcm(result, len);
  }
  return static_cast<std::uint32_t>(result);
}

Index Group::index_of(const Permutation& p) const {
  auto found = find(p.images());
  if (!found) throw Error(ErrorCode::InvalidArgument, "permutation is not a group element");
  return *found;
}

Group enumerate_group(std::span<const Permutation> generators, std::size_t cap) {
  return Group::enumerate(generators, cap);
}

std::uint32_t element_order(const Group& g, Index x) { return g.element_order(x); }

Subgroup::Subgroup(std::size_t parent_order, std::vector<Index> members,
                   std::vector<Index> generators)
    : members_(std::move(members)), generators_(std::move(generators)), mask_(parent_order, false) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Index x : members_) {
    if (x >= parent_order) throw Error(ErrorCode::InvalidArgument, "subgroup member out of range");
    mask_[x] = true;
  }
}

Subgroup subgroup_generated(const Group& g, std::span<const Index> generators) {
  for (Index s : generators) {
    if (s >= g.order()) throw Error(ErrorCode::InvalidArgument, "generator index out of range");
  }
  std::vector<bool> in(g.order(), false);
  std::vector<Index> members{Group::identity()};
  in[Group::identity()] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Index s : generators) {
      Index y = g.multiply(members[i], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  return Subgroup(g.order(), std::move(members),
                  std::vector<Index>(generators.begin(), generators.end()));
}

Subgroup whole_group(const Group& g) {
  std::vector<Index> all(g.order());
  std::iota(all.begin(), all.end(), Index{0});
  return Subgroup(g.order(), std::move(all), g.generators());
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  if (a.parent_order() != b.parent_order()) {
    throw Error(ErrorCode::InvalidArgument, "subgroups of different groups");
  }
  std::vector<Index> common;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(common));
  return Subgroup(a.parent_order(), std::move(common), {});
}

Subgroup point_stabilizer(const Group& g, Point a) {
  std::vector<Index> members;
  for (Index x = 0; x < g.order(); ++x) {
    if (g.images(x)[a] == a) members.push_back(x);
  }
  return Subgroup(g.order(), std::move(members), {});
}

ConjugacyClasses::ConjugacyClasses(const Group& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kUnassigned = ~std::size_t{0};
  std::vector<std::size_t> label(n, kUnassigned);
  std::vector<std::vector<Index>> orbits;
  for (Index x = 0; x < n; ++x) {
    if (label[x] != kUnassigned) continue;
    const std::size_t id = orbits.size();
    std::vector<Index> orbit{x};
    label[x] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Index s : g.generators()) {
        Index y = g.multiply(g.multiply(g.inverse(s), orbit[i]), s);
        if (label[y] == kUnassigned) {
          label[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  std::vector<std::size_t> order(orbits.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (orbits[a].size() != orbits[b].size()) return orbits[a].size() < orbits[b].size();
    return orbits[a].front() < orbits[b].front();
  });
  members_.reserve(orbits.size());
  for (std::size_t c : order) members_.push_back(std::move(orbits[c]));

  class_of_.assign(n, 0);
  for (std::size_t c = 0; c < members_.size(); ++c) {
    for (Index x : members_[c]) class_of_[x] = c;
  }
  inverse_class_.resize(members_.size());
  powers_.resize(members_.size());
  for (std::size_t c = 0; c < members_.size(); ++c) {
    const Index rep = members_[c].front();
    inverse_class_[c] = class_of_[g.inverse(rep)];
    const std::uint32_t ord = g.element_order(rep);
    auto& pw = powers_[c];
    pw.resize(ord);
    Index acc = Group::identity();
    for (std::uint32_t k = 0; k < ord; ++k) {
      pw[k] = class_of_[acc];
      acc = g.multiply(acc, rep);
    }
    exponent_ = std::lcm(exponent_, static_cast<std::uint64_t>(ord));
  }
}

std::size_t ConjugacyClasses::power_class(std::size_t c, long long k) const {
  const auto& pw = powers_[c];
  const long long n = static_cast<long long>(pw.size());
  return pw[static_cast<std::size_t>(((k % n) + n) % n)];
}

std::vector<std::size_t> ConjugacyClasses::power_map(long long k) const {
  std::vector<std::size_t> result(size());
  for (std::size_t c = 0; c < size(); ++c) result[c] = power_class(c, k);
  return result;
}

ConjugacyClasses conjugacy_classes(const Group& g) { return ConjugacyClasses(g); }

std::vector<DoubleCoset> double_cosets(const Group& g, const Subgroup& h, const Subgroup& k) {
  auto gens_of = [](const Subgroup& s) {
    return s.generators().empty() ? s.members() : s.generators();
  };
  const std::vector<Index> left_gens = gens_of(h);
  const std::vector<Index> right_gens = gens_of(k);
  std::vector<bool> done(g.order(), false);
  std::vector<DoubleCoset> result;
  for (Index x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<Index> block{x};
    done[x] = true;
    auto visit = [&](Index z) {
      if (!done[z]) {
        done[z] = true;
        block.push_back(z);
      }
    };
    for (std::size_t i = 0; i < block.size(); ++i) {
      const Index y = block[i];
      for (Index a : left_gens) visit(g.multiply(a, y));
      for (Index b : right_gens) visit(g.multiply(y, b));
    }
    std::sort(block.begin(), block.end());
    result.push_back(DoubleCoset{block.front(), std::move(block)});
  }
  return result;
}

}  // namespace polyreal
