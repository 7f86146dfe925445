#include <doctest.h>

#include <polyreal/error.hpp>
#include <polyreal/stringc.hpp>
#include <polyreal/wreath.hpp>

#include <cmath>

#include "fixtures.hpp"

using namespace polyreal;

namespace {

std::shared_ptr<const Group> shared(Group g) { return std::make_shared<const Group>(std::move(g)); }

Group trivial_group() {
  const std::vector<Permutation> none{Permutation::identity(1)};
  return Group::enumerate(none);
}

// Table of U wr C2 from the Clifford formulas, against Dixon-Schneider on the
// same class list.
void check_oracle(std::shared_ptr<const Group> u) {
  const WreathGroup w(u);
  auto gcc = std::make_shared<const ConjugacyClasses>(w.group());
  const auto utable = character_table(*u);
  const auto formula = wreath_irreducibles(w, gcc, utable);
  const auto dixon = character_table(w.group(), gcc);
  const std::size_t n = utable.size();
  CHECK(formula.size() == n * (n - 1) / 2 + 2 * n);
  CHECK(verify_orthogonality(formula));
  CHECK(formula.irreducibles() == dixon.irreducibles());
}

}  // namespace

TEST_CASE("wreath orders and structure") {
  const WreathGroup t(shared(trivial_group()));
  CHECK(t.group().order() == 2);
  CHECK(t.hhat().order() == 2);

  const WreathGroup w(shared(fixtures::sym3()));
  CHECK(w.group().order() == 72);
  CHECK(w.hhat().order() == 12);
  CHECK(w.hhat_is_c2_times_u());
  CHECK(w.center().order() == 1);

  CHECK_THROWS_AS(wreath_c2(shared(fixtures::sym4()), 1000), Error);
}

TEST_CASE("wreath element decomposition") {
  auto u = shared(fixtures::sym3());
  const WreathGroup w(u);
  for (Index x = 0; x < w.group().order(); ++x) CHECK(w.compose(w.decompose(x)) == x);
  const Index t = w.flip();
  for (Index a = 0; a < u->order(); ++a) {
    for (Index b = 0; b < u->order(); ++b) {
      const Index n = w.compose({false, a, b});
      // (u, v)^t = (v, u)
      const Index conj = w.group().multiply(w.group().multiply(t, n), t);
      CHECK(w.decompose(conj) == WreathElement{false, b, a});
      // t (u, v) composes as "flip, then (u, v)"
      CHECK(w.group().multiply(t, n) == w.compose({true, a, b}));
    }
  }
}

TEST_CASE("wreath irreducibles equal Dixon-Schneider tables") {
  check_oracle(shared(trivial_group()));
  check_oracle(shared(fixtures::cyclic(2)));
  check_oracle(shared(fixtures::cyclic(3)));
  check_oracle(shared(fixtures::sym3()));
  check_oracle(shared(fixtures::quaternion8()));
  check_oracle(shared(fixtures::dihedral4()));
}

TEST_CASE("vertex constituents are multiplicity free") {
  {
    auto u = shared(trivial_group());
    const WreathGroup w(u);
    const ConjugacyClasses gcc(w.group());
    const auto c = wreath_vertex_constituents(w, gcc, character_table(*u));
    REQUIRE(c.size() == 1);
    CHECK(c[0].degree == 1);
  }
  {
    auto u = shared(fixtures::cyclic(3));
    const WreathGroup w(u);
    const ConjugacyClasses gcc(w.group());
    const auto c = wreath_vertex_constituents(w, gcc, character_table(*u));
    REQUIRE(c.size() == 2);
    CHECK(c[0].sign == 1);
    CHECK(c[1].phi_bar.has_value());
    CHECK(c[1].degree == 2);
  }
  for (auto u : {shared(fixtures::sym3()), shared(fixtures::quaternion8()), shared(fixtures::cyclic(4))}) {
    const WreathGroup w(u);
    const ConjugacyClasses gcc(w.group());
    const auto utable = character_table(*u);
    const auto c = wreath_vertex_constituents(w, gcc, utable);
    std::size_t orbits = 0;
    for (std::size_t i = 0; i < utable.size(); ++i) orbits += utable.conjugate_of(i) >= i;
    CHECK(c.size() == orbits);
    const auto pi = induced_trivial_character(gcc, w.hhat());
    for (const auto& ch : c) CHECK(inner_product(gcc, pi, ch.values) == Cyclo(1));
    // double cosets of Hhat <-> symmetrized classes
    CHECK(double_cosets(w.group(), w.hhat(), w.hhat()).size() == symmetrized_classes(utable.classes()).size());
  }
}

TEST_CASE("quaternion base: extension sign follows the indicator") {
  auto u = shared(fixtures::quaternion8());
  const WreathGroup w(u);
  const ConjugacyClasses gcc(w.group());
  const auto utable = character_table(*u);
  const auto c = wreath_vertex_constituents(w, gcc, utable);
  bool saw_minus = false;
  for (const auto& ch : c) {
    CHECK(ch.sign == utable.indicator(ch.phi));
    saw_minus |= ch.sign == -1;
  }
  CHECK(saw_minus);
}

TEST_CASE("wreath cosine") {
  const auto table = character_table(fixtures::sym3());
  for (std::size_t phi = 0; phi < table.size(); ++phi) CHECK(wreath_cosine(table, phi, 0) == Cyclo(1));
  for (std::size_t c = 0; c < table.classes().size(); ++c) CHECK(wreath_cosine(table, 0, c) == Cyclo(1));
}

TEST_CASE("600-cell through SL(2,5) wr C2") {
  const auto r = sixhundred_cell_report();
  CHECK(r.wreath_order == 28800);
  CHECK(r.center_order == 2);
  CHECK(r.quotient_order == 14400);
  CHECK(r.vertices == 120);
  CHECK(r.layers == 9);
  CHECK(r.double_cosets == 9);
  CHECK(r.dimensions == std::vector<long>{1, 4, 4, 9, 9, 16, 16, 25, 36});
  CHECK(r.multiplicity_free);
  CHECK(r.cosines_match);
  CHECK(r.spherical_match);
  CHECK(r.gelfand == GelfandClass::Gelfand);
  CHECK(r.base_invariants);
  CHECK(r.cone.all_checks_pass());
  CHECK(r.passes());
  // trivial phi gives the all-ones row
  for (const auto& v : r.cosine_table[0]) CHECK(v == Cyclo(1));
  // cosines are bounded by 1 and are +-1 only on the two central layers
  for (const auto& row : r.cosine_table) {
    std::size_t extreme = 0;
    for (const auto& v : row) {
      CHECK(std::abs(v.to_complex()) <= 1.0 + 1e-12);
      extreme += std::abs(std::abs(v.to_complex()) - 1.0) < 1e-12;
    }
    if (!(row == r.cosine_table[0])) CHECK(extreme == 2);
  }
}
