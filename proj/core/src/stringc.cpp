#include "polyreal/stringc.hpp"

#include <algorithm>
#include <string>

#include "polyreal/error.hpp"
#include "polyreal/gset.hpp"

namespace polyreal {

namespace {

long mod(long a, unsigned p) {
  const long r = a % static_cast<long>(p);
  return r < 0 ? r + static_cast<long>(p) : r;
}

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Index image_of(const Group& g, unsigned p, const Mat2& m) {
  const Permutation perm = mobius(p, m);
  auto found = g.find(perm.images());
  if (!found) throw Error(ErrorCode::InvalidParams, "matrix is not in PSL(2," + std::to_string(p) + ")");
  return *found;
}

bool commute(const Group& g, Index a, Index b) { return g.multiply(a, b) == g.multiply(b, a); }

}  // namespace

StringCReport verify_string_cgroup(const Group& g, std::span<const Index> gens) {
  const std::size_t n = gens.size();
  if (n > 6) throw Error(ErrorCode::RankTooLarge, "rank " + std::to_string(n) + " exceeds 6");
  StringCReport report;
  report.involutions = std::all_of(gens.begin(), gens.end(), [&](Index s) { return g.element_order(s) == 2; });
  report.string_condition = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (!commute(g, gens[i], gens[j])) report.string_condition = false;
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) report.schlafli.push_back(g.element_order(g.multiply(gens[i], gens[i + 1])));

  const std::size_t subsets = std::size_t{1} << n;
  std::vector<Subgroup> sub;
  sub.reserve(subsets);
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::vector<Index> chosen;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) chosen.push_back(gens[i]);
    }
    sub.push_back(subgroup_generated(g, chosen));
  }
  report.intersection_property = true;
  for (std::size_t i = 0; i < subsets && report.intersection_property; ++i) {
    for (std::size_t j = i + 1; j < subsets; ++j) {
      if (!(intersection(sub[i], sub[j]) == sub[i & j])) {
        report.intersection_property = false;
        break;
      }
    }
  }
  return report;
}

Permutation mobius(unsigned p, const Mat2& m) {
  const long a = mod(m.a00, p), b = mod(m.a01, p), c = mod(m.a10, p), d = mod(m.a11, p);
  if (mod(a * d - b * c, p) != 1) throw Error(ErrorCode::InvalidParams, "matrix determinant is not 1");
  const Point inf = p;
  std::vector<Point> images(p + 1);
  for (long x = 0; x < static_cast<long>(p); ++x) {
    const long num = mod(a * x + c, p);
    const long den = mod(b * x + d, p);
    images[x] = den == 0 ? inf : static_cast<Point>(mod(num * mod_inverse(den, p), p));
  }
  images[inf] = b == 0 ? inf : static_cast<Point>(mod(a * mod_inverse(b, p), p));
  return Permutation(std::move(images));
}

Group psl_group(unsigned p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p > kMaxPslPrime) throw Error(ErrorCode::PrimeTooLarge, std::to_string(p) + " exceeds " + std::to_string(kMaxPslPrime));
  const std::vector<Permutation> gens{mobius(p, {1, 1, 0, 1}), mobius(p, {0, 1, -1, 0})};
  return Group::enumerate(gens);
}

Group sl2_group(unsigned p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p > kMaxPslPrime) throw Error(ErrorCode::PrimeTooLarge, std::to_string(p) + " exceeds " + std::to_string(kMaxPslPrime));
  auto linear = [p](const Mat2& m) {
    std::vector<Point> images(p * p - 1);
    for (long a = 0; a < static_cast<long>(p); ++a) {
      for (long b = 0; b < static_cast<long>(p); ++b) {
        if (a == 0 && b == 0) continue;
        const long a2 = mod(a * m.a00 + b * m.a10, p);
        const long b2 = mod(a * m.a01 + b * m.a11, p);
        images[a * p + b - 1] = static_cast<Point>(a2 * p + b2 - 1);
      }
    }
    return Permutation(std::move(images));
  };
  const std::vector<Permutation> gens{linear({1, 1, 0, 1}), linear({0, 1, -1, 0})};
  return Group::enumerate(gens);
}

long mod_inverse(long a, unsigned p) {
  long r0 = static_cast<long>(p), r1 = mod(a, p), t0 = 0, t1 = 1;
  if (r1 == 0) throw Error(ErrorCode::DivisionByZero, "zero has no inverse mod " + std::to_string(p));
  while (r1 != 0) {
    const long q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0 != 1) throw Error(ErrorCode::InvalidArgument, "not invertible");
  return mod(t0, p);
}

unsigned multiplicative_order(long y, unsigned p) {
  const long base = mod(y, p);
  if (base == 0) return 0;
  long x = base;
  unsigned k = 1;
  while (x != 1) {
    x = mod(x * base, p);
    ++k;
  }
  return k;
}

std::array<Mat2, 3> lemma_matrices(const PSLParams& params) {
  const unsigned p = params.p;
  if (p < 3 || !is_prime(p)) throw Error(ErrorCode::InvalidParams, "p must be an odd prime");
  const long y = mod(params.y, p), a = mod(params.a, p), b = mod(params.b, p);
  if (y == 0 || y == 1 || y == static_cast<long>(p) - 1) throw Error(ErrorCode::InvalidParams, "y must not be 0 or +-1");
  if (a == 0) throw Error(ErrorCode::InvalidParams, "a must be nonzero");
  if (mod(a * a + b * b + 1, p) != 0) throw Error(ErrorCode::InvalidParams, "a^2 + b^2 must be -1");
  return {Mat2{0, 1, -1, 0}, Mat2{0, y, mod(-mod_inverse(y, p), p), 0}, Mat2{a, b, b, mod(-a, p)}};
}

std::array<Index, 3> lemma_generators(const Group& g, const PSLParams& params) {
  const auto mats = lemma_matrices(params);
  if (g.degree() != params.p + 1) throw Error(ErrorCode::InvalidParams, "group does not act on the projective line");
  return {image_of(g, params.p, mats[0]), image_of(g, params.p, mats[1]), image_of(g, params.p, mats[2])};
}

std::pair<long, long> find_ab(unsigned p) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorCode::InvalidParams, "p must be an odd prime");
  for (long a = 1; a < static_cast<long>(p); ++a) {
    for (long b = 0; b < static_cast<long>(p); ++b) {
      if (mod(a * a + b * b + 1, p) == 0) return {a, b};
    }
  }
  throw Error(ErrorCode::NoMatch, "no a, b with a^2 + b^2 = -1");
}

GenerationReport generation_check(const Group& g, unsigned p, Index s0, Index s1, Index s2) {
  GenerationReport report;
  const std::array<Index, 3> gens{s0, s1, s2};
  report.subgroup_order = subgroup_generated(g, gens).order();
  report.generates = report.subgroup_order == g.order();
  const auto o01 = g.element_order(g.multiply(s0, s1));
  const auto o12 = g.element_order(g.multiply(s1, s2));
  report.lemma_hypothesis = p % 4 == 3 && (o01 >= 6 || o12 >= 6);
  return report;
}

WeilReport weil_constituent_check(const Group& g, const CharacterTable& table, unsigned p) {
  (void)g;
  const auto& cc = table.classes();
  WeilReport report;
  report.degree = (static_cast<long>(p) - 1) / 2;
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table.degree(i) != report.degree) continue;
    bool ok = true;
    for (std::size_t k = 1; k < cc.size() && ok; ++k) {
      const Cyclo& v = table[i][k];
      if (cc.element_order(k) == p) {
        ok = !v.is_real();
      } else {
        ok = v == Cyclo(-1) || v.is_zero() || v == Cyclo(1);
      }
    }
    if (ok) hits.push_back(i);
  }
  if (hits.empty()) throw Error(ErrorCode::NoMatch, "no character of degree " + std::to_string(report.degree) + " with the expected values");
  report.matches = hits.size();
  report.chi = hits.front();
  report.chi_bar = table.conjugate_of(report.chi);
  return report;
}

PSLPolytopeReport psl_polytope(const PSLParams& params, std::span<const std::size_t> stabilizer,
                               const TableOptions& options) {
  PSLPolytopeReport report;
  report.params = params;
  auto g = std::make_shared<const Group>(psl_group(params.p));
  const auto gens = lemma_generators(*g, params);
  report.stringc = verify_string_cgroup(*g, gens);
  report.generation = generation_check(*g, params.p, gens[0], gens[1], gens[2]);

  std::vector<Index> hgens;
  for (std::size_t i : stabilizer) {
    if (i >= gens.size()) throw Error(ErrorCode::InvalidArgument, "stabilizer generator out of range");
    hgens.push_back(gens[i]);
  }
  const Subgroup h = subgroup_generated(*g, hgens);
  report.stabilizer_order = h.order();

  auto classes = std::make_shared<const ConjugacyClasses>(*g);
  auto table = std::make_shared<const CharacterTable>(character_table(*g, classes, options));
  report.weil = weil_constituent_check(*g, *table, params.p);

  const GSetAnalysis analysis = analyze_gset(GSet::cosets(g, h), table);
  report.vertices = analysis.gset().size();
  const auto& sigmas = analysis.real_irreducibles();
  for (std::size_t s = 0; s < sigmas.size(); ++s) {
    const auto& cons = sigmas[s].constituents;
    if (std::find(cons.begin(), cons.end(), report.weil.chi) != cons.end()) {
      report.weil_multiplicity = analysis.multiplicities()[s];
    }
  }
  report.cone = cone_report(analysis);
  return report;
}

CounterexampleReport counterexample_pipeline(unsigned p, long y, const TableOptions& options) {
  if (p % 4 != 3) throw Error(ErrorCode::InvalidParams, "p must be 3 mod 4");
  if (multiplicative_order(y, p) != 7) throw Error(ErrorCode::InvalidParams, "y must have multiplicative order 7");
  const auto [a, b] = find_ab(p);
  const PSLParams params{p, y, a, b};
  const std::array<std::size_t, 2> stab{0, 1};

  CounterexampleReport report;
  report.polytope = psl_polytope(params, stab, options);
  if (!report.polytope.stringc.passes() || !report.polytope.generation.generates) {
    throw Error(ErrorCode::StringCFailed, "generators do not give a string C-group on PSL(2," + std::to_string(p) + ")");
  }
  report.bound = Rational(static_cast<long>(p) - 1, 28) - Rational(13, 14);
  report.bound.canonicalize();
  report.bound_holds = Rational(report.polytope.weil_multiplicity) >= report.bound;
  return report;
}

PslSearchResult psl_order3_search(unsigned p) {
  PslSearchResult result;
  result.p = p;
  const Group g = psl_group(p);
  const Index s0 = image_of(g, p, {0, 1, -1, 0});
  std::vector<Index> s1s, s2s;
  for (Index x = 1; x < g.order(); ++x) {
    if (g.element_order(x) != 2 || x == s0) continue;
    if (g.element_order(g.multiply(s0, x)) == 3) s1s.push_back(x);
    if (commute(g, s0, x)) s2s.push_back(x);
  }
  for (Index s1 : s1s) {
    for (Index s2 : s2s) {
      ++result.candidates_tried;
      if (s2 == s1) continue;
      const std::array<Index, 3> gens{s0, s1, s2};
      if (subgroup_generated(g, gens).order() != g.order()) continue;
      const StringCReport rep = verify_string_cgroup(g, gens);
      if (!rep.passes()) continue;
      result.found = true;
      result.generators = gens;
      result.schlafli = rep.schlafli;
      return result;
    }
  }
  return result;
}

}  // namespace polyreal
