#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <span>
#include <vector>

#include "polyreal/char_table.hpp"
#include "polyreal/group.hpp"
#include "polyreal/realization.hpp"

namespace polyreal {

struct StringCReport {
  bool involutions = false;
  bool string_condition = false;
  bool intersection_property = false;
  /// Orders of s_i s_{i+1}.
  std::vector<std::uint32_t> schlafli;

  bool passes() const noexcept { return involutions && string_condition && intersection_property; }
};

/// Checks the string C-group axioms for the generators s_0..s_{n-1}. The
/// intersection property is tested for every pair of subsets I, J.
/// Throws RankTooLarge for n > 6.
StringCReport verify_string_cgroup(const Group& g, std::span<const Index> gens);

/// An element of SL(2,p) as [[a00, a01], [a10, a11]], entries reduced mod p.
struct Mat2 {
  long a00, a01, a10, a11;
};

/// Largest prime accepted by psl_group.
inline constexpr unsigned kMaxPslPrime = 50;

/// PSL(2,p) acting on the projective line {0, ..., p-1, inf = p}; the matrix
/// [[a, b], [c, d]] maps x to (a x + c) / (b x + d), the action on row
/// vectors (x, 1). Throws NotPrime, PrimeTooLarge.
Group psl_group(unsigned p);
/// SL(2,p) acting on the p^2 - 1 nonzero row vectors of F_p^2 by v -> v M;
/// vector (a, b) is point a p + b - 1. Throws NotPrime, PrimeTooLarge.
Group sl2_group(unsigned p);
/// Projective-line permutation of a matrix of determinant 1 mod p.
Permutation mobius(unsigned p, const Mat2& m);

struct PSLParams {
  unsigned p;
  long y, a, b;
};

/// The matrices S0 = [[0,1],[-1,0]], S1 = [[0,y],[-1/y,0]], S2 = [[a,b],[b,-a]].
std::array<Mat2, 3> lemma_matrices(const PSLParams& params);
/// Images of the lemma matrices in g = psl_group(p). Throws InvalidParams.
std::array<Index, 3> lemma_generators(const Group& g, const PSLParams& params);

/// Smallest a >= 1, then smallest b >= 0, with a^2 + b^2 = -1 mod p.
std::pair<long, long> find_ab(unsigned p);

long mod_inverse(long a, unsigned p);
/// Multiplicative order of y mod p (0 when y = 0 mod p).
unsigned multiplicative_order(long y, unsigned p);

struct GenerationReport {
  bool generates = false;
  bool lemma_hypothesis = false;  // ord(s0 s1) >= 6 or ord(s1 s2) >= 6
  std::size_t subgroup_order = 0;
};
GenerationReport generation_check(const Group& g, unsigned p, Index s0, Index s1, Index s2);

struct WeilReport {
  long degree = 0;
  std::size_t chi = 0;       // table row
  std::size_t chi_bar = 0;   // its conjugate
  std::size_t matches = 0;   // rows with the value pattern
};
/// Throws NoMatch when no row has the expected degree and value pattern.
WeilReport weil_constituent_check(const Group& g, const CharacterTable& table, unsigned p);

struct PSLPolytopeReport {
  PSLParams params{};
  StringCReport stringc;
  GenerationReport generation;
  std::size_t stabilizer_order = 0;
  std::size_t vertices = 0;
  WeilReport weil;
  long weil_multiplicity = 0;  // m_sigma for sigma = chi + conj chi
  std::optional<ConeReport> cone;
};

/// Vertex set = cosets of H = <s_i : i in stabilizer>, for the lemma
/// generators of `params`.
PSLPolytopeReport psl_polytope(const PSLParams& params, std::span<const std::size_t> stabilizer,
                               const TableOptions& options = {});

struct CounterexampleReport {
  PSLPolytopeReport polytope;
  Rational bound;  // (p-1)/28 - 13/14
  bool bound_holds = false;
};
/// H = <s0, s1>, dihedral of order 14. Requires p = 3 mod 4 and y of order 7
/// (InvalidParams otherwise); throws StringCFailed if the generators fail.
CounterexampleReport counterexample_pipeline(unsigned p, long y, const TableOptions& options = {});

struct PslSearchResult {
  unsigned p = 0;
  bool found = false;
  std::array<Index, 3> generators{};
  std::vector<std::uint32_t> schlafli;
  std::size_t candidates_tried = 0;
};
/// Looks for involutions s0, s1, s2 generating PSL(2,p) as a string C-group
/// with ord(s0 s1) = 3. Exploratory: no theorem guarantees a hit.
PslSearchResult psl_order3_search(unsigned p);

}  // namespace polyreal
