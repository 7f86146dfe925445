// Acceptance suite: one PASS/FAIL line per criterion. Every derived quantity
// is recomputed here from first principles (brute force over group elements,
// Frobenius reciprocity, orbit counting) and compared with the library.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <polyreal/char_table.hpp>
#include <polyreal/error.hpp>
#include <polyreal/h4.hpp>
#include <polyreal/psd_sqrt.hpp>
#include <polyreal/realization.hpp>
#include <polyreal/stringc.hpp>
#include <polyreal/wreath.hpp>

#include "fixtures.hpp"

using namespace polyreal;

namespace {

using GroupPtr = std::shared_ptr<const Group>;
using TablePtr = std::shared_ptr<const CharacterTable>;

GroupPtr share(Group g) { return std::make_shared<const Group>(std::move(g)); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    if (o.pass) o.detail = "failed: " + what;
    o.pass = false;
  }
}

// ---------------------------------------------------------------------------
// Oracles

/// Row and column orthogonality with exact arithmetic, written out directly.
bool orthogonality_oracle(const CharacterTable& t) {
  const auto& cc = t.classes();
  const std::size_t n = t.size();
  const auto order = static_cast<long long>(cc.group_order());
  if (n != cc.size()) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Cyclo s;
      for (std::size_t k = 0; k < n; ++k) {
        s += Cyclo(static_cast<long long>(cc.class_size(k))) * t[i][k] * t[j][k].conj();
      }
      if (s != Cyclo(i == j ? order : 0)) return false;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k; l < n; ++l) {
      Cyclo s;
      for (std::size_t i = 0; i < n; ++i) s += t[i][k] * t[i][l].conj();
      if (s != Cyclo(k == l ? static_cast<long long>(cc.centralizer_order(k)) : 0)) return false;
    }
  }
  return true;
}

/// <(1_H)^G, chi> = (1/|H|) sum_{h in H} chi(h).
std::vector<long> frobenius_multiplicities(const CharacterTable& t, const Subgroup& h) {
  const auto& cc = t.classes();
  std::vector<std::size_t> per_class(cc.size(), 0);
  for (Index x : h.members()) ++per_class[cc.class_of(x)];
  std::vector<long> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    Cyclo s;
    for (std::size_t k = 0; k < cc.size(); ++k) {
      if (per_class[k] != 0) s += Cyclo(static_cast<long long>(per_class[k])) * t[i][k];
    }
    s /= Cyclo(static_cast<long long>(h.order()));
    const auto q = s.as_rational();
    if (!q || !is_integer(*q)) throw Error(ErrorCode::NonIntegralMultiplicity, "oracle multiplicity not integral");
    out.push_back(q->get_num().get_si());
  }
  return out;
}

/// Frobenius-Schur indicators by summing chi(g^2) over every element.
std::vector<int> indicator_oracle(const Group& g, const CharacterTable& t) {
  const auto& cc = t.classes();
  std::vector<std::size_t> square_class(cc.size(), 0);
  for (Index x = 0; x < g.order(); ++x) ++square_class[cc.class_of(g.multiply(x, x))];
  std::vector<int> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    Cyclo s;
    for (std::size_t k = 0; k < cc.size(); ++k) {
      if (square_class[k] != 0) s += Cyclo(static_cast<long long>(square_class[k])) * t[i][k];
    }
    s /= Cyclo(static_cast<long long>(g.order()));
    out.push_back(static_cast<int>(s.as_rational().value().get_num().get_si()));
  }
  return out;
}

/// Number of G-orbits on unordered pairs {xi, eta} (xi = eta allowed).
std::size_t pair_orbit_oracle(const GSet& s) {
  const std::size_t n = s.size();
  auto id = [n](std::size_t a, std::size_t b) { return a <= b ? a * n + b : b * n + a; };
  std::vector<std::size_t> parent(n * n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::vector<Point>> act;
  for (Index gen : s.group().generators()) {
    std::vector<Point> img(n);
    for (Point p = 0; p < n; ++p) img[p] = s.act(p, gen);
    act.push_back(std::move(img));
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      for (const auto& img : act) {
        const std::size_t x = find(id(a, b)), y = find(id(img[a], img[b]));
        if (x != y) parent[x] = y;
      }
    }
  }
  std::size_t count = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) count += find(id(a, b)) == id(a, b);
  }
  return count;
}

/// Q_sigma[alpha, eta] = (1/|G|) sum_{chi in sigma} chi(1) sum_{g : alpha g = eta} chi(g),
/// evaluated at every point eta; `constant` reports whether it is constant on layers.
struct ProjectionOracle {
  std::vector<std::vector<Cyclo>> layer_values;  // [sigma][layer]
  bool constant_on_layers = true;
};

ProjectionOracle projection_oracle(const GSetAnalysis& a) {
  const GSet& s = a.gset();
  const auto& t = a.table();
  const auto& cc = t.classes();
  const std::size_t n = s.size();
  std::vector<std::vector<std::uint32_t>> counts(n, std::vector<std::uint32_t>(cc.size(), 0));
  for (Index x = 0; x < s.group().order(); ++x) ++counts[s.act(s.base(), x)][cc.class_of(x)];

  ProjectionOracle out;
  const auto& layers = a.layers();
  const auto order = static_cast<long long>(s.group().order());
  for (const auto& sigma : a.real_irreducibles()) {
    std::vector<Cyclo> per_point(n);
    for (Point eta = 0; eta < n; ++eta) {
      Cyclo v;
      for (std::size_t chi : sigma.constituents) {
        Cyclo inner;
        for (std::size_t k = 0; k < cc.size(); ++k) {
          if (counts[eta][k] != 0) inner += Cyclo(static_cast<long long>(counts[eta][k])) * t[chi][k];
        }
        v += Cyclo(t.degree(chi)) * inner;
      }
      per_point[eta] = v / Cyclo(order);
    }
    std::vector<Cyclo> values(layers.count());
    for (std::size_t i = 0; i < layers.count(); ++i) values[i] = per_point[layers.reps[i]];
    for (Point eta = 0; eta < n; ++eta) {
      out.constant_on_layers = out.constant_on_layers && per_point[eta] == values[layers.layer_of[eta]];
    }
    out.layer_values.push_back(std::move(values));
  }
  return out;
}

/// Base-point row of a product of invariant matrices given by layer values,
/// from explicit counts over the middle index.
std::vector<Cyclo> product_row(const LayeredGSet& space, const std::vector<std::map<std::pair<std::size_t, std::size_t>, long>>& counts,
                               const std::vector<Cyclo>& a, const std::vector<Cyclo>& b) {
  std::vector<Cyclo> out(space.layers().count());
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& [ij, c] : counts[k]) {
      if (!a[ij.first].is_zero() && !b[ij.second].is_zero()) {
        out[k] += Cyclo(static_cast<long long>(c)) * a[ij.first] * b[ij.second];
      }
    }
  }
  return out;
}

std::vector<std::map<std::pair<std::size_t, std::size_t>, long>> product_counts(const LayeredGSet& space) {
  const auto& layers = space.layers();
  const Point alpha = space.gset().base();
  std::vector<std::map<std::pair<std::size_t, std::size_t>, long>> counts(layers.count());
  for (std::size_t k = 0; k < layers.count(); ++k) {
    for (Point zeta = 0; zeta < space.size(); ++zeta) {
      ++counts[k][{space.orbital(alpha, zeta), space.orbital(zeta, layers.reps[k])}];
    }
  }
  return counts;
}

// ---------------------------------------------------------------------------
// Corpus of transitive G-sets

struct Pair {
  std::string name;
  GroupPtr group;
  Subgroup stabilizer;
};

struct Corpus {
  std::vector<Pair> pairs;
  std::map<const Group*, TablePtr> tables;

  TablePtr table(const GroupPtr& g) {
    auto& t = tables[g.get()];
    if (!t) t = std::make_shared<const CharacterTable>(character_table(*g));
    return t;
  }
};

Corpus build_corpus() {
  using namespace fixtures;
  Corpus c;
  auto add = [&](std::string name, GroupPtr g, std::vector<Index> gens) {
    Subgroup h = subgroup_generated(*g, gens);
    c.pairs.push_back({std::move(name), std::move(g), std::move(h)});
  };
  auto idx = [](const GroupPtr& g, const Permutation& p) { return g->index_of(p); };

  auto s3 = share(sym3());
  add("S3 / <(0 1)>", s3, {idx(s3, cyc(3, {{0, 1}}))});
  auto s4 = share(sym4());
  add("S4 / <(0 1)>", s4, {idx(s4, cyc(4, {{0, 1}}))});
  add("S4 / <(0 1),(2 3)>", s4, {idx(s4, cyc(4, {{0, 1}})), idx(s4, cyc(4, {{2, 3}}))});
  add("S4 / S3", s4, {idx(s4, cyc(4, {{0, 1}})), idx(s4, cyc(4, {{0, 1, 2}}))});
  auto a5 = share(alt5());
  add("A5 / C3", a5, {idx(a5, cyc(5, {{0, 1, 2}}))});
  add("A5 / C5", a5, {idx(a5, cyc(5, {{0, 1, 2, 3, 4}}))});
  add("A5 / A4", a5, {idx(a5, cyc(5, {{0, 1, 2}})), idx(a5, cyc(5, {{0, 1}, {2, 3}}))});
  add("D4 regular", share(dihedral4()), {});
  add("Q8 regular", share(quaternion8()), {});
  add("C5 regular", share(cyclic(5)), {});
  auto sl25 = share(sl2_group(5));
  c.pairs.push_back({"SL(2,5) on nonzero vectors", sl25, point_stabilizer(*sl25, 0)});
  auto psl7 = share(psl_group(7));
  c.pairs.push_back({"PSL(2,7) on the projective line", psl7, point_stabilizer(*psl7, 0)});
  auto psl19 = share(psl_group(19));
  const auto gens19 = lemma_generators(*psl19, {19, 2, 8, -7});
  add("PSL(2,19) / <s1,s2>", psl19, {gens19[1], gens19[2]});
  const H4Model h4 = h4_model();
  add("H4 / <s1,s2,s3> (600-cell)", h4.group, {h4.reflections[0], h4.reflections[1], h4.reflections[2]});
  add("H4 / <s2,s3,s4> (120-cell)", h4.group, {h4.reflections[1], h4.reflections[2], h4.reflections[3]});
  return c;
}

// ---------------------------------------------------------------------------
// Criteria

Outcome criterion_tables() {
  using namespace fixtures;
  struct Case {
    const char* name;
    Group g;
    std::vector<long> degrees;
  };
  std::vector<Case> cases;
  cases.push_back({"S3", sym3(), {1, 1, 2}});
  cases.push_back({"S4", sym4(), {1, 1, 2, 3, 3}});
  cases.push_back({"A5", alt5(), {1, 3, 3, 4, 5}});
  cases.push_back({"Q8", quaternion8(), {1, 1, 1, 1, 2}});
  cases.push_back({"SL(2,5)", special_linear2(5), {1, 2, 2, 3, 3, 4, 4, 5, 6}});
  Outcome o;
  for (const auto& c : cases) {
    const auto t = character_table(c.g);
    std::vector<long> d;
    for (std::size_t i = 0; i < t.size(); ++i) d.push_back(t.degree(i));
    std::sort(d.begin(), d.end());
    require(o, d == c.degrees, std::string(c.name) + " degrees");
    require(o, orthogonality_oracle(t), std::string(c.name) + " orthogonality");
  }
  if (o.pass) o.detail = "5 tables, exact orthogonality";
  return o;
}

Outcome criterion_psl19() {
  Outcome o;
  const std::array<std::size_t, 2> stab{1, 2};
  const auto r = psl_polytope({19, 2, 8, -7}, stab);
  const Group g = psl_group(19);
  require(o, g.order() == 3420, "group order");
  require(o, r.stringc.passes(), "string C-group");
  require(o, r.stringc.schlafli == std::vector<std::uint32_t>{9, 3}, "Schlafli type");
  require(o, r.stabilizer_order == 6, "|H|");

  const auto gens = lemma_generators(g, {19, 2, 8, -7});
  const std::array<Index, 2> hg{gens[1], gens[2]};
  const Subgroup h = subgroup_generated(g, hg);
  const auto t = character_table(g);
  const auto m = frobenius_multiplicities(t, h);
  bool found = false;
  for (std::size_t i = 0; i < t.size(); ++i) {
    found = found || (t.degree(i) == 9 && t.conjugate_of(i) != i && m[i] == 2);
  }
  require(o, found, "non-real degree 9 character with multiplicity 2");

  bool subcone = false;
  for (const auto& e : r.cone->entries) subcone = subcone || (e.type == RealType::C && e.multiplicity == 2 && e.subcone_dim == 4);
  require(o, subcone, "type C subcone with m = 2, dim 4");
  if (o.pass) o.detail = "order 3420, {9,3}, |H|=6, type C m=2 dim 4";
  return o;
}

Outcome criterion_weil() {
  Outcome o;
  for (unsigned p : {7U, 11U, 19U, 23U}) {
    const Group g = psl_group(p);
    const auto t = character_table(g);
    const auto& cc = t.classes();
    const long d = (static_cast<long>(p) - 1) / 2;
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t.degree(i) != d) continue;
      bool ok = true;
      for (std::size_t k = 1; k < cc.size(); ++k) {
        const Cyclo& v = t[i][k];
        const bool real = v == v.conj();
        if (cc.element_order(k) == p) {
          ok = ok && !real;
        } else {
          ok = ok && (v == Cyclo(-1) || v.is_zero() || v == Cyclo(1));
        }
      }
      if (ok) hits.push_back(i);
    }
    const bool pair = hits.size() == 2 && t.conjugate_of(hits[0]) == hits[1];
    require(o, pair, "unique conjugate pair for p=" + std::to_string(p));
    const auto w = weil_constituent_check(g, t, p);
    require(o, w.degree == d && w.matches == 2, "library Weil check for p=" + std::to_string(p));
  }
  if (o.pass) o.detail = "p = 7, 11, 19, 23";
  return o;
}

Outcome criterion_psl43() {
  Outcome o;
  const auto r = counterexample_pipeline(43, 4);
  require(o, r.polytope.stringc.passes() && r.polytope.generation.generates, "string C-group");
  Rational bound = Rational(42, 28) - Rational(13, 14);
  bound.canonicalize();
  require(o, bound == Rational(4, 7), "bound value");
  require(o, Rational(r.polytope.weil_multiplicity) >= bound, "m >= bound");
  require(o, r.polytope.weil_multiplicity >= 1, "m >= 1");
  require(o, r.polytope.cone && r.polytope.cone->all_checks_pass(), "cone report checks");
  o.detail = (o.pass ? "" : o.detail + "; ") + "m = " + std::to_string(r.polytope.weil_multiplicity) + ", bound 4/7, |H| = " +
             std::to_string(r.polytope.stabilizer_order);
  return o;
}

Outcome criterion_600cell() {
  Outcome o;
  const auto r = sixhundred_cell_report();
  std::vector<long> dims(r.dimensions.begin(), r.dimensions.end());
  std::sort(dims.begin(), dims.end());
  require(o, r.layers == 9, "9 layers");
  require(o, dims == std::vector<long>{1, 4, 4, 9, 9, 16, 16, 25, 36}, "dimensions");
  require(o, std::accumulate(dims.begin(), dims.end(), 0L) == 120, "dimension sum");
  require(o, r.cosines_match, "cosines equal phi(u)/phi(1)");
  require(o, r.spherical_match, "spherical functions agree");
  require(o, r.gelfand == GelfandClass::Gelfand, "Gelfand pair");
  if (o.pass) o.detail = "9 layers, dims {1,4,4,9,9,16,16,25,36}";
  return o;
}

Outcome criterion_120cell() {
  Outcome o;
  const auto r = validate_120cell();
  require(o, r.multiplicity_one == 15, "15 characters with m = 1");
  require(o, r.multiplicity_two_degrees == std::vector<long>{16, 16, 48}, "m = 2 degrees");
  require(o, r.multiplicity_three_degrees == std::vector<long>{25, 36}, "m = 3 degrees");
  require(o, r.all_real, "all type R");
  require(o, r.half_lines == 15 && r.psd2 == 3 && r.psd3 == 2, "cone shape");

  const H4Model h4 = h4_model();
  const std::array<Index, 3> hg{h4.reflections[1], h4.reflections[2], h4.reflections[3]};
  const Subgroup h = subgroup_generated(*h4.group, hg);
  const auto t = character_table(*h4.group);
  const auto m = frobenius_multiplicities(t, h);
  const auto nu = indicator_oracle(*h4.group, t);
  long twice = 0;
  for (std::size_t i = 0; i < t.size(); ++i) twice += m[i] * (m[i] + nu[i]);
  const std::size_t r1 = pair_orbit_oracle(GSet::cosets(h4.group, h));
  require(o, twice % 2 == 0 && static_cast<std::size_t>(twice / 2) == r1, "layer identity");
  require(o, r.layers == r1, "library layer count");
  if (o.pass) o.detail = "15 x R+, 3 x PSD2, 2 x PSD3, r+1 = " + std::to_string(r1);
  return o;
}

struct AnalyzedPair {
  const Pair* pair;
  GSetAnalysis analysis;
  ProjectionOracle oracle;
};

Outcome criterion_structure(const std::vector<AnalyzedPair>& corpus) {
  Outcome o;
  for (const auto& ap : corpus) {
    const auto& a = ap.analysis;
    const auto& name = ap.pair->name;
    const auto& t = a.table();
    const auto& layers = a.layers();
    const auto& sigmas = a.real_irreducibles();
    const auto& q = ap.oracle.layer_values;
    const auto omega = static_cast<long long>(a.gset().size());
    const std::size_t r = layers.count();

    require(o, ap.oracle.constant_on_layers, name + ": projections constant on layers");
    const auto m_chi = frobenius_multiplicities(t, a.gset().stabilizer());
    require(o, m_chi == a.complex_multiplicities(), name + ": multiplicities");

    std::vector<Cyclo> sum(r);
    for (std::size_t s = 0; s < sigmas.size(); ++s) {
      require(o, homogeneous_projection(a, s).values() == q[s], name + ": Q_sigma against oracle");
      for (std::size_t i = 0; i < r; ++i) sum[i] += q[s][i];
    }
    std::vector<Cyclo> identity(r);
    identity[0] = Cyclo(1);
    require(o, sum == identity, name + ": sum of Q_sigma = I");

    const auto counts = product_counts(a.space());
    std::vector<std::size_t> present;
    for (std::size_t s = 0; s < sigmas.size(); ++s) {
      if (a.multiplicities()[s] > 0) present.push_back(s);
    }
    for (std::size_t s : present) {
      for (std::size_t u : present) {
        const auto prod = product_row(a.space(), counts, q[s], q[u]);
        require(o, prod == (s == u ? q[s] : std::vector<Cyclo>(r)), name + ": Q_sigma Q_tau = delta Q_sigma");
      }
    }

    for (std::size_t s = 0; s < sigmas.size(); ++s) {
      long expected = 0;
      for (std::size_t chi : sigmas[s].constituents) expected += m_chi[chi] * t.degree(chi);
      require(o, Cyclo(omega) * q[s][0] == Cyclo(expected), name + ": trace by constituents");
      require(o, expected == a.multiplicities()[s] * sigmas[s].degree, name + ": trace = m sigma(1)");
      for (std::size_t u = 0; u < sigmas.size(); ++u) {
        Cyclo inner;
        for (std::size_t i = 0; i < r; ++i) {
          inner += Cyclo(static_cast<long long>(layers.sizes[i])) * q[s][i] * q[u][i].conj();
        }
        inner /= Cyclo(omega);
        const Cyclo want = s == u ? Cyclo(Rational(expected, static_cast<long>(omega * omega))) : Cyclo(0);
        require(o, inner == want, name + ": Lambda-orthogonality");
      }
    }

    const std::size_t r1 = pair_orbit_oracle(a.gset());
    require(o, r1 == r, name + ": layer count");
    long real_formula = 0;
    for (std::size_t s = 0; s < sigmas.size(); ++s) {
      const long m = a.multiplicities()[s];
      real_formula += m + m * (m - 1) / 2 * sigmas[s].norm;
    }
    const auto nu = indicator_oracle(a.gset().group(), t);
    long twice = 0;
    for (std::size_t i = 0; i < t.size(); ++i) twice += m_chi[i] * (m_chi[i] + nu[i]);
    require(o, static_cast<std::size_t>(real_formula) == r1, name + ": sum m + sum m(m-1)/2 <s,s>");
    require(o, twice % 2 == 0 && static_cast<std::size_t>(twice / 2) == r1, name + ": 1/2 sum m(m + nu2)");
  }
  if (o.pass) o.detail = std::to_string(corpus.size()) + " (G,H) pairs";
  return o;
}

Outcome criterion_integrality(const std::vector<AnalyzedPair>& corpus) {
  Outcome o;
  std::size_t entries = 0;
  for (const auto& ap : corpus) {
    const auto& a = ap.analysis;
    for (std::size_t s = 0; s < a.real_irreducibles().size(); ++s) {
      if (a.multiplicities()[s] != 1) continue;
      const auto& q = ap.oracle.layer_values[s];
      const auto cert = integrality_certificate(a, s);
      for (std::size_t i = 0; i < q.size(); ++i) {
        const Cyclo value = Cyclo(static_cast<long long>(a.layers().sizes[i])) * q[i] / q[0];
        require(o, value.is_algebraic_integer(), ap.pair->name + ": layer size x cosine integral");
        require(o, cert[i].value == value && cert[i].is_integer, ap.pair->name + ": library certificate");
        ++entries;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(entries) + " entries";
  return o;
}

Outcome criterion_psd_sqrt(const std::vector<AnalyzedPair>& corpus) {
  Outcome o;
  std::mt19937_64 rng(20261017);
  std::vector<const AnalyzedPair*> small;
  for (const auto& ap : corpus) {
    if (ap.analysis.gset().size() <= 120) small.push_back(&ap);
  }
  double worst = 0, worst_comm = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const AnalyzedPair& ap = *small[static_cast<std::size_t>(trial) % small.size()];
    const auto& a = ap.analysis;
    std::vector<Cyclo> values(a.layers().count());
    for (std::size_t s = 0; s < a.real_irreducibles().size(); ++s) {
      const Rational c(static_cast<long>(rng() % 21), static_cast<long>(1 + rng() % 10));
      for (std::size_t i = 0; i < values.size(); ++i) values[i] += Cyclo(c) * ap.oracle.layer_values[s][i];
    }
    const InvariantMatrix q(a.shared_space(), values);
    const SqrtResult res = psd_sqrt_commuting(q);

    const GSet& gs = a.gset();
    const std::size_t n = gs.size();
    const DenseMatrix& root = res.root;
    double resid = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double v = 0;
        for (std::size_t k = 0; k < n; ++k) v += root(i, k) * root(j, k);
        resid = std::max(resid, std::abs(v - q.entry(static_cast<Point>(i), static_cast<Point>(j)).to_complex().real()));
      }
    }
    double comm = 0;
    for (Index gen : gs.group().generators()) {
      std::vector<Point> img(n), inv(n);
      for (Point p = 0; p < n; ++p) img[p] = gs.act(p, gen);
      for (Point p = 0; p < n; ++p) inv[img[p]] = p;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) comm = std::max(comm, std::abs(root(img[i], j) - root(i, inv[j])));
      }
    }
    worst = std::max(worst, resid);
    worst_comm = std::max(worst_comm, comm);
  }
  require(o, worst <= 1e-8, "||AA^t - Q|| <= 1e-8");
  require(o, worst_comm <= 1e-8, "commutation residual <= 1e-8");
  char buf[96];
  std::snprintf(buf, sizeof buf, "100 matrices, max residual %.1e, max commutation %.1e", worst, worst_comm);
  o.detail = (o.pass ? "" : o.detail + "; ") + buf;
  return o;
}

Outcome criterion_wreath() {
  using namespace fixtures;
  std::vector<std::pair<std::string, Group>> bases;
  bases.emplace_back("1", enumerate_group(std::vector{Permutation::identity(1)}));
  for (std::size_t n : {2, 3, 4, 5, 6}) bases.emplace_back("C" + std::to_string(n), cyclic(n));
  bases.emplace_back("S3", sym3());
  bases.emplace_back("D4", dihedral4());
  bases.emplace_back("Q8", quaternion8());
  bases.emplace_back("A4", enumerate_group(std::vector{cyc(4, {{0, 1, 2}}), cyc(4, {{0, 1}, {2, 3}})}));
  bases.emplace_back("S4", sym4());
  bases.emplace_back("SL(2,3)", special_linear2(3));
  Outcome o;
  for (auto& [name, g] : bases) {
    require(o, g.order() <= 24, name + " order");
    const WreathGroup w(share(std::move(g)));
    auto classes = std::make_shared<const ConjugacyClasses>(w.group());
    const auto ut = character_table(w.base());
    const auto formula = wreath_irreducibles(w, classes, ut);
    const auto dixon = character_table(w.group(), classes);
    require(o, formula.irreducibles() == dixon.irreducibles(), name + " wr C2 table");
  }
  if (o.pass) o.detail = std::to_string(bases.size()) + " base groups of order <= 24";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0: no limit
    std::function<Outcome()> run;
  };

  std::vector<AnalyzedPair> corpus_analysis;
  Corpus corpus;
  auto corpus_ready = [&]() -> const std::vector<AnalyzedPair>& {
    if (corpus_analysis.empty()) {
      corpus = build_corpus();
      for (const auto& p : corpus.pairs) {
        auto a = analyze_gset(GSet::cosets(p.group, p.stabilizer), corpus.table(p.group));
        auto oracle = projection_oracle(a);
        corpus_analysis.push_back({&p, std::move(a), std::move(oracle)});
      }
    }
    return corpus_analysis;
  };

  const std::vector<Criterion> criteria{
      {1, "character table oracles", 10, criterion_tables},
      {2, "PSL(2,19) string C-group with a type C multiplicity 2 subcone", 60, criterion_psl19},
      {3, "Weil constituents of PSL(2,p)", 120, criterion_weil},
      {4, "PSL(2,43) with y of order 7", 600, criterion_psl43},
      {5, "600-cell through SL(2,5) wr C2", 300, criterion_600cell},
      {6, "120-cell multiplicity profile and layer identity", 600, criterion_120cell},
      {7, "structural identities on the corpus", 0, [&] { return criterion_structure(corpus_ready()); }},
      {8, "integrality of layer size x cosine", 0, [&] { return criterion_integrality(corpus_ready()); }},
      {9, "commuting PSD square root", 0, [&] { return criterion_psd_sqrt(corpus_ready()); }},
      {10, "wreath character formulas against Dixon-Schneider", 0, criterion_wreath},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit)";
    }
    failures += o.pass ? 0 : 1;
    std::printf("criterion %2d %s  %s  [%s]  %.2fs\n", c.id, o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
