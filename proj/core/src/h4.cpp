#include "polyreal/h4.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "polyreal/error.hpp"
#include "polyreal/gset.hpp"
#include "polyreal/stringc.hpp"
#include "polyreal/wreath.hpp"

namespace polyreal {

QSqrt5 QSqrt5::inverse() const {
  const Rational n = x_ * x_ - 5 * y_ * y_;
  if (n == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in Q(sqrt 5)");
  return QSqrt5(x_ / n, -y_ / n);
}

double QSqrt5::to_double() const { return x_.get_d() + y_.get_d() * std::sqrt(5.0); }

Cyclo QSqrt5::to_cyclo() const {
  // Quadratic Gauss sum of conductor 5.
  static const Cyclo root5 = Cyclo::root_of_unity(5, 1) - Cyclo::root_of_unity(5, 2) - Cyclo::root_of_unity(5, 3) +
                             Cyclo::root_of_unity(5, 4);
  return Cyclo(x_) + Cyclo(y_) * root5;
}

std::string QSqrt5::to_string() const {
  if (y_ == 0) return x_.get_str();
  std::string s = x_ == 0 ? "" : x_.get_str() + (y_ > 0 ? "+" : "");
  return s + y_.get_str() + "*sqrt5";
}

bool operator<(const QuatQ5& a, const QuatQ5& b) {
  if (!(a.w == b.w)) return a.w < b.w;
  if (!(a.x == b.x)) return a.x < b.x;
  if (!(a.y == b.y)) return a.y < b.y;
  return a.z < b.z;
}

QSqrt5 golden_a() { return QSqrt5(Rational(-1, 2), Rational(1, 2)); }
QSqrt5 golden_b() { return QSqrt5(Rational(-1, 2), Rational(-1, 2)); }

std::array<QuatQ5, 4> root_system_h4() {
  const QSqrt5 a = golden_a(), b = golden_b(), half(Rational(1, 2)), mhalf(Rational(-1, 2));
  return {QuatQ5{0, 0, 1, 0}, QuatQ5{0, half * a, half * b, mhalf}, QuatQ5{0, 0, 0, 1},
          QuatQ5{half * a, half * b, 0, mhalf}};
}

QuatQ5 reflect(const QuatQ5& alpha, const QuatQ5& x) { return -(alpha * x.conj() * alpha); }

std::vector<QuatQ5> icosian_group() {
  const auto roots = root_system_h4();
  const std::array<QuatQ5, 4> gens{roots[0], roots[1], roots[2], QuatQ5{-1, 0, 0, 0}};
  std::set<QuatQ5> seen{QuatQ5{1, 0, 0, 0}};
  std::vector<QuatQ5> queue{QuatQ5{1, 0, 0, 0}};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : gens) {
      QuatQ5 y = queue[head] * g;
      if (seen.insert(y).second) {
        if (seen.size() > 120) throw Error(ErrorCode::ClosureOverflow, "icosian closure exceeds 120 elements");
        queue.push_back(std::move(y));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

Point locate(const std::vector<QuatQ5>& points, const QuatQ5& q) {
  auto it = std::lower_bound(points.begin(), points.end(), q);
  if (it == points.end() || !(*it == q)) throw Error(ErrorCode::ClosureOverflow, "image is not an icosian");
  return static_cast<Point>(it - points.begin());
}

template <class F>
Permutation permutation_of(const std::vector<QuatQ5>& points, F&& map) {
  std::vector<Point> images;
  images.reserve(points.size());
  for (const auto& q : points) images.push_back(locate(points, map(q)));
  return Permutation(std::move(images));
}

struct Invariants {
  std::size_t order, center, classes;
  std::vector<std::size_t> class_sizes;
  std::vector<long> degrees;
  friend bool operator==(const Invariants&, const Invariants&) = default;
};

Invariants invariants_of(const Group& g, const TableOptions& options) {
  auto cc = std::make_shared<const ConjugacyClasses>(g);
  const CharacterTable table = character_table(g, cc, options);
  Invariants inv{g.order(), 0, cc->size(), {}, {}};
  for (std::size_t c = 0; c < cc->size(); ++c) {
    inv.class_sizes.push_back(cc->class_size(c));
    if (cc->class_size(c) == 1) ++inv.center;
  }
  for (std::size_t i = 0; i < table.size(); ++i) inv.degrees.push_back(table.degree(i));
  std::sort(inv.class_sizes.begin(), inv.class_sizes.end());
  std::sort(inv.degrees.begin(), inv.degrees.end());
  return inv;
}

}  // namespace

H4Model h4_model() {
  H4Model model;
  model.points = icosian_group();
  const auto roots = root_system_h4();
  std::vector<Permutation> gens;
  for (const auto& alpha : roots) {
    gens.push_back(permutation_of(model.points, [&](const QuatQ5& x) { return reflect(alpha, x); }));
  }
  model.group = std::make_shared<const Group>(Group::enumerate(gens));
  for (std::size_t i = 0; i < 4; ++i) model.reflections[i] = model.group->index_of(gens[i]);
  model.one = locate(model.points, QuatQ5{1, 0, 0, 0});
  return model;
}

Group h4_group() { return Group(*h4_model().group); }

Group icosian_regular_group(const std::vector<QuatQ5>& icosians) {
  const auto roots = root_system_h4();
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < 3; ++i) {
    gens.push_back(permutation_of(icosians, [&](const QuatQ5& x) { return x * roots[i]; }));
  }
  return Group::enumerate(gens);
}

bool OneTwentyCellReport::profile_matches() const noexcept {
  return group_order == 14400 && stabilizer_order == 24 && vertices == 600 && multiplicity_one == 15 &&
         multiplicity_two_degrees == std::vector<long>{16, 16, 48} &&
         multiplicity_three_degrees == std::vector<long>{25, 36} && all_real && half_lines == 15 && psd2 == 3 &&
         psd3 == 2 && cone.all_checks_pass();
}

OneTwentyCellReport validate_120cell(const TableOptions& options) {
  OneTwentyCellReport report;
  const H4Model model = h4_model();
  const Group& g = *model.group;
  report.group_order = g.order();
  const std::array<Index, 3> hgens{model.reflections[1], model.reflections[2], model.reflections[3]};
  const Subgroup h = subgroup_generated(g, hgens);
  report.stabilizer_order = h.order();

  auto table = std::make_shared<const CharacterTable>(character_table(g, options));
  const GSetAnalysis analysis = analyze_gset(GSet::cosets(model.group, h), table);
  report.vertices = analysis.gset().size();
  report.layers = analysis.layers().count();
  report.cone = cone_report(analysis);

  report.all_real = true;
  const auto& m = analysis.complex_multiplicities();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (table->indicator(i) != 1) report.all_real = false;
    if (m[i] == 1) ++report.multiplicity_one;
    if (m[i] == 2) report.multiplicity_two_degrees.push_back(table->degree(i));
    if (m[i] == 3) report.multiplicity_three_degrees.push_back(table->degree(i));
  }
  std::sort(report.multiplicity_two_degrees.begin(), report.multiplicity_two_degrees.end());
  std::sort(report.multiplicity_three_degrees.begin(), report.multiplicity_three_degrees.end());
  for (const auto& e : report.cone.entries) {
    if (e.multiplicity == 0 || e.type != RealType::R) continue;
    if (e.multiplicity == 1) ++report.half_lines;
    if (e.multiplicity == 2) ++report.psd2;
    if (e.multiplicity == 3) ++report.psd3;
  }
  return report;
}

bool cosine_tables_equivalent(const std::vector<std::size_t>& sizes_a, const std::vector<std::vector<Cyclo>>& a,
                              const std::vector<std::size_t>& sizes_b, const std::vector<std::vector<Cyclo>>& b) {
  const std::size_t n = sizes_a.size();
  if (sizes_b.size() != n || a.size() != b.size()) return false;
  for (const auto& row : a) if (row.size() != n) return false;
  for (const auto& row : b) if (row.size() != n) return false;

  auto sorted_a = a;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::vector<std::size_t> perm(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> assign = [&](std::size_t col) -> bool {
    if (col == n) {
      std::vector<std::vector<Cyclo>> permuted;
      for (const auto& row : b) {
        std::vector<Cyclo> r;
        for (std::size_t c = 0; c < n; ++c) r.push_back(row[perm[c]]);
        permuted.push_back(std::move(r));
      }
      std::sort(permuted.begin(), permuted.end());
      return permuted == sorted_a;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || sizes_b[c] != sizes_a[col]) continue;
      // Prune: every row value in this column must occur in a's column.
      std::vector<Cyclo> ca, cb;
      for (const auto& row : a) ca.push_back(row[col]);
      for (const auto& row : b) cb.push_back(row[c]);
      std::sort(ca.begin(), ca.end());
      std::sort(cb.begin(), cb.end());
      if (ca != cb) continue;
      used[c] = true;
      perm[col] = c;
      if (assign(col + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  return assign(0);
}

CrossCheckReport cross_check_600cell(const TableOptions& options) {
  CrossCheckReport report;
  const H4Model model = h4_model();
  const Group& g = *model.group;
  const GSet vertices = GSet::orbit(model.group, model.one);
  const std::array<Index, 3> hgens{model.reflections[0], model.reflections[1], model.reflections[2]};
  report.stabilizer_is_s123 = vertices.stabilizer() == subgroup_generated(g, hgens);

  auto table = std::make_shared<const CharacterTable>(character_table(g, options));
  const GSetAnalysis analysis = analyze_gset(vertices, table);
  const auto& layers = analysis.layers();
  report.h4_layers = layers.count();

  std::vector<long> h4_dims;
  bool h4_free = true;
  for (std::size_t s = 0; s < analysis.real_irreducibles().size(); ++s) {
    const long m = analysis.multiplicities()[s];
    if (m > 1) h4_free = false;
    if (m != 1) continue;
    h4_dims.push_back(analysis.real_irreducibles()[s].degree);
    report.h4_cosines.push_back(cosine_vector_pure(analysis, s));
  }
  std::sort(h4_dims.begin(), h4_dims.end());

  std::vector<Cyclo> geometric;
  for (Point rep : layers.reps) geometric.push_back(model.points[vertices.labels()[rep]].w.to_cyclo());
  report.geometric_row_found =
      std::find(report.h4_cosines.begin(), report.h4_cosines.end(), geometric) != report.h4_cosines.end();

  const SixHundredCellReport wreath = sixhundred_cell_report(options);
  report.wreath_layers = wreath.layers;
  auto sizes_h4 = layers.sizes;
  auto sizes_w = wreath.layer_sizes;
  std::sort(sizes_h4.begin(), sizes_h4.end());
  std::sort(sizes_w.begin(), sizes_w.end());
  report.layer_sizes_match = sizes_h4 == sizes_w;
  report.profiles_match = h4_free && wreath.multiplicity_free && h4_dims == wreath.dimensions;
  report.cosine_tables_match =
      wreath.cosines_match &&
      cosine_tables_equivalent(layers.sizes, report.h4_cosines, wreath.layer_sizes, wreath.cosine_table);

  const Group icosians = icosian_regular_group(model.points);
  report.icosian_invariants = invariants_of(icosians, options) == invariants_of(sl2_group(5), options);
  return report;
}

nlohmann::json icosians_to_json(const std::vector<QuatQ5>& icosians) {
  auto coord = [](const QSqrt5& v) {
    return nlohmann::json::array({v.rational_part().get_str(), v.sqrt5_part().get_str()});
  };
  nlohmann::json out = nlohmann::json::array();
  for (const auto& q : icosians) {
    out.push_back({{"w", coord(q.w)}, {"i", coord(q.x)}, {"j", coord(q.y)}, {"k", coord(q.z)}});
  }
  return out;
}

}  // namespace polyreal
