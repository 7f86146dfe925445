#include <doctest.h>

#include <polyreal/error.hpp>
#include <polyreal/h4.hpp>
#include <polyreal/stringc.hpp>

#include <algorithm>
#include <cmath>

using namespace polyreal;

TEST_CASE("Q(sqrt 5) arithmetic") {
  const QSqrt5 a = golden_a(), b = golden_b();
  CHECK(a + b == QSqrt5(-1));
  CHECK(a * b == QSqrt5(-1));
  CHECK(a * a + b * b == QSqrt5(3));
  CHECK(a * a.inverse() == QSqrt5(1));
  CHECK_THROWS_AS(QSqrt5(0).inverse(), Error);
  CHECK(std::abs(a.to_double() - 2 * std::cos(2 * M_PI / 5)) < 1e-12);
  CHECK(std::abs(b.to_double() - 2 * std::cos(4 * M_PI / 5)) < 1e-12);

  const Cyclo r5 = QSqrt5::sqrt5().to_cyclo();
  CHECK(r5 * r5 == Cyclo(5));
  CHECK(std::abs(r5.to_complex() - std::sqrt(5.0)) < 1e-12);
  // 2 cos(2 pi / 5) = E(5) + E(5)^4
  CHECK(a.to_cyclo() == Cyclo::root_of_unity(5, 1) + Cyclo::root_of_unity(5, 4));
  CHECK(QSqrt5(Rational(1, 2), Rational(-3, 4)).to_string() == "1/2-3/4*sqrt5");
}

TEST_CASE("H4 roots and icosians") {
  const auto roots = root_system_h4();
  for (const auto& r : roots) CHECK(r.norm() == QSqrt5(1));
  const auto a12 = roots[0] * roots[1];
  CHECK(a12 * a12 == roots[3]);

  const auto ico = icosian_group();
  REQUIRE(ico.size() == 120);
  for (const auto& q : ico) CHECK(q.norm() == QSqrt5(1));
  auto contains = [&](const QuatQ5& q) { return std::binary_search(ico.begin(), ico.end(), q); };
  for (long s : {1L, -1L}) {
    CHECK(contains({s, 0, 0, 0}));
    CHECK(contains({0, s, 0, 0}));
    CHECK(contains({0, 0, s, 0}));
    CHECK(contains({0, 0, 0, s}));
  }
  for (std::size_t i = 0; i < ico.size(); i += 7) {
    CHECK(contains(ico[i].conj()));
    for (std::size_t j = 0; j < ico.size(); j += 5) CHECK(contains(ico[i] * ico[j]));
  }
  for (const auto& r : roots) {
    CHECK(reflect(r, r) == -r);
    for (std::size_t i = 0; i < ico.size(); i += 3) CHECK(reflect(r, ico[i]).norm() == ico[i].norm());
  }
  CHECK(icosians_to_json(ico).size() == 120);
}

TEST_CASE("H4 reflection group") {
  const H4Model m = h4_model();
  const Group& g = *m.group;
  CHECK(g.order() == 14400);
  const auto rep = verify_string_cgroup(g, m.reflections);
  CHECK(rep.passes());
  auto sch = rep.schlafli;
  std::sort(sch.begin(), sch.end());
  CHECK(sch == std::vector<std::uint32_t>{3, 3, 5});
  const std::array<Index, 3> h{m.reflections[0], m.reflections[1], m.reflections[2]};
  CHECK(point_stabilizer(g, m.one) == subgroup_generated(g, h));
  CHECK(point_stabilizer(g, m.one).order() == 120);
  const Group reg = icosian_regular_group(m.points);
  CHECK(reg.order() == 120);
}

TEST_CASE("120-cell multiplicity profile") {
  const auto r = validate_120cell();
  CHECK(r.stabilizer_order == 24);
  CHECK(r.vertices == 600);
  CHECK(r.multiplicity_one == 15);
  CHECK(r.multiplicity_two_degrees == std::vector<long>{16, 16, 48});
  CHECK(r.multiplicity_three_degrees == std::vector<long>{25, 36});
  CHECK(r.all_real);
  CHECK(r.half_lines == 15);
  CHECK(r.psd2 == 3);
  CHECK(r.psd3 == 2);
  CHECK(r.cone.layer_identity_complex);
  CHECK(r.layers == 36);
  CHECK(r.cone.total_dimension == 36);  // 15 + 3 * 3 + 2 * 6
  CHECK(r.profile_matches());
}

TEST_CASE("600-cell: quaternion and wreath models agree") {
  const auto r = cross_check_600cell();
  CHECK(r.h4_layers == 9);
  CHECK(r.wreath_layers == 9);
  CHECK(r.stabilizer_is_s123);
  CHECK(r.layer_sizes_match);
  CHECK(r.profiles_match);
  CHECK(r.cosine_tables_match);
  CHECK(r.geometric_row_found);
  CHECK(r.icosian_invariants);
  CHECK(r.passes());
}

TEST_CASE("cosine table matching") {
  const std::vector<std::size_t> sizes{1, 2, 2};
  const std::vector<std::vector<Cyclo>> a{{Cyclo(1), Cyclo(1), Cyclo(1)}, {Cyclo(1), Cyclo(0), Cyclo(-1)}};
  const std::vector<std::vector<Cyclo>> b{{Cyclo(1), Cyclo(-1), Cyclo(0)}, {Cyclo(1), Cyclo(1), Cyclo(1)}};
  CHECK(cosine_tables_equivalent(sizes, a, sizes, b));
  const std::vector<std::vector<Cyclo>> c{{Cyclo(1), Cyclo(-1), Cyclo(-1)}, {Cyclo(1), Cyclo(1), Cyclo(1)}};
  CHECK_FALSE(cosine_tables_equivalent(sizes, a, sizes, c));
}
