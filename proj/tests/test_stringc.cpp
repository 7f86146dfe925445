#include <doctest.h>

#include <polyreal/error.hpp>
#include <polyreal/stringc.hpp>

#include <set>

#include "fixtures.hpp"

using namespace polyreal;

namespace {

// Distinct Moebius maps from brute-force enumeration of SL(2,p).
std::size_t brute_psl_order(unsigned p) {
  std::set<std::vector<Point>> seen;
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b)
      for (long c = 0; c < p; ++c)
        for (long d = 0; d < p; ++d)
          if (((a * d - b * c) % p + p) % p == 1) {
            auto perm = mobius(p, {a, b, c, d});
            seen.emplace(perm.images().begin(), perm.images().end());
          }
  return seen.size();
}

}  // namespace

TEST_CASE("psl group orders") {
  for (unsigned p : {3U, 5U, 7U}) CHECK(psl_group(p).order() == brute_psl_order(p));
  CHECK(psl_group(19).order() == 3420);
  CHECK_THROWS_AS(psl_group(21), Error);
  CHECK_THROWS_AS(psl_group(53), Error);
  try {
    psl_group(53);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PrimeTooLarge);
  }
}

TEST_CASE("mobius convention") {
  // x -> (a x + c) / (b x + d) with [[a,b],[c,d]]
  const auto t = mobius(7, {1, 1, 0, 1});
  CHECK(t[0] == 0);   // 0 / 1
  CHECK(t[6] == 7);   // 6 / 0 = inf
  CHECK(t[7] == 1);   // inf -> a/b
  CHECK_THROWS_AS(mobius(7, {1, 1, 1, 1}), Error);
}

TEST_CASE("find_ab and modular helpers") {
  CHECK(find_ab(3) == std::pair<long, long>{1, 1});
  CHECK(find_ab(19) == std::pair<long, long>{1, 6});
  for (unsigned p : {5U, 7U, 11U, 13U, 43U}) {
    auto [a, b] = find_ab(p);
    CHECK((a * a + b * b + 1) % p == 0);
    for (long a2 = 1; a2 < a; ++a2)
      for (long b2 = 0; b2 < p; ++b2) CHECK((a2 * a2 + b2 * b2 + 1) % p != 0);
  }
  CHECK(mod_inverse(2, 19) == 10);
  CHECK(multiplicative_order(2, 43) == 14);
  CHECK(multiplicative_order(4, 43) == 7);
}

TEST_CASE("example triple in PSL(2,19)") {
  const Group g = psl_group(19);
  // S1 = [[0,2],[9,0]] and S2 = [[8,-7],[-7,-8]] taken verbatim
  const Index s0 = g.index_of(mobius(19, {0, 1, -1, 0}));
  const Index s1 = g.index_of(mobius(19, {0, 2, 9, 0}));
  const Index s2 = g.index_of(mobius(19, {8, -7, -7, -8}));
  const auto lemma = lemma_generators(g, {19, 2, 8, -7});
  CHECK(lemma[0] == s0);
  CHECK(lemma[1] == s1);
  CHECK(lemma[2] == s2);

  const std::array<Index, 3> gens{s0, s1, s2};
  const auto rep = verify_string_cgroup(g, gens);
  CHECK(rep.passes());
  CHECK(rep.schlafli == std::vector<std::uint32_t>{9, 3});
  const std::array<Index, 2> h{s1, s2};
  CHECK(subgroup_generated(g, h).order() == 6);
  const auto gen = generation_check(g, 19, s0, s1, s2);
  CHECK(gen.generates);
  CHECK(gen.lemma_hypothesis);
}

TEST_CASE("string C-group failures") {
  const Group g = psl_group(7);
  const auto gens = lemma_generators(g, {7, 2, 2, 3});
  std::array<Index, 3> dup{gens[0], gens[0], gens[2]};
  CHECK_FALSE(verify_string_cgroup(g, dup).intersection_property);
  std::array<Index, 2> notinv{g.generators()[0], gens[1]};
  CHECK_FALSE(verify_string_cgroup(g, notinv).involutions);
  std::vector<Index> seven(7, gens[0]);
  CHECK_THROWS_AS(verify_string_cgroup(g, seven), Error);
  CHECK_THROWS_AS(lemma_generators(g, {7, 1, 2, 3}), Error);
  CHECK_THROWS_AS(lemma_generators(g, {7, 2, 1, 1}), Error);
  CHECK_THROWS_AS(lemma_generators(g, {7, 2, 0, 3}), Error);
}

TEST_CASE("weil constituent") {
  for (unsigned p : {7U, 11U, 19U, 23U}) {
    const Group g = psl_group(p);
    const auto table = character_table(g);
    const auto w = weil_constituent_check(g, table, p);
    CHECK(w.degree == (static_cast<long>(p) - 1) / 2);
    CHECK(w.matches == 2);
    CHECK(w.chi != w.chi_bar);
    CHECK(table.conjugate_of(w.chi_bar) == w.chi);
  }
  const Group g5 = psl_group(5);
  CHECK_THROWS_AS(weil_constituent_check(g5, character_table(g5), 5), Error);
}

TEST_CASE("p = 19 polytope: degree 9 pair with multiplicity 2") {
  const std::array<std::size_t, 2> stab{1, 2};
  const auto rep = psl_polytope({19, 2, 8, -7}, stab);
  CHECK(rep.stabilizer_order == 6);
  CHECK(rep.vertices == 570);
  CHECK(rep.weil.degree == 9);
  CHECK(rep.weil_multiplicity == 2);
  REQUIRE(rep.cone.has_value());
  CHECK(rep.cone->all_checks_pass());
  bool seen = false;
  for (const auto& e : rep.cone->entries) {
    if (e.type == RealType::C && e.degree == 18 && e.multiplicity == 2) {
      CHECK(e.subcone_dim == 4);
      seen = true;
    }
  }
  CHECK(seen);
}

TEST_CASE("counterexample pipeline") {
  CHECK_THROWS_AS(counterexample_pipeline(29, 7), Error);   // 29 = 1 mod 4
  CHECK_THROWS_AS(counterexample_pipeline(43, 2), Error);   // order 14
  const auto rep = counterexample_pipeline(43, 4);
  CHECK(rep.polytope.stabilizer_order == 14);
  CHECK(rep.polytope.stringc.schlafli[0] == 7);
  CHECK(rep.polytope.weil.degree == 21);
  CHECK(rep.bound == Rational(4, 7));
  CHECK(rep.bound_holds);
  CHECK(rep.polytope.weil_multiplicity >= 1);
}

TEST_CASE("order-3 search") {
  const auto r = psl_order3_search(19);
  CHECK(r.found);
  CHECK(r.schlafli.front() == 3);
  const Group g = psl_group(19);
  CHECK(verify_string_cgroup(g, r.generators).passes());
}
