#include "suite.hpp"

#include <algorithm>
#include <chrono>

#include <polyreal/error.hpp>
#include <polyreal/h4.hpp>
#include <polyreal/stringc.hpp>
#include <polyreal/wreath.hpp>

namespace polyreal::cli {

namespace {

using Cycles = std::vector<std::vector<Point>>;

Group from_cycles(std::size_t degree, const std::vector<Cycles>& gens) {
  std::vector<Permutation> perms;
  for (const auto& c : gens) perms.push_back(Permutation::from_cycles(degree, c));
  return Group::enumerate(perms);
}

std::string join(const std::vector<long>& v) {
  std::string s;
  for (long x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "{" + s + "}";
}

SuiteRow tables(const TableOptions& options) {
  struct Case {
    const char* name;
    Group g;
    std::vector<long> degrees;
  };
  std::vector<Case> cases;
  cases.push_back({"S3", from_cycles(3, {{{0, 1}}, {{0, 1, 2}}}), {1, 1, 2}});
  cases.push_back({"S4", from_cycles(4, {{{0, 1}}, {{0, 1, 2, 3}}}), {1, 1, 2, 3, 3}});
  cases.push_back({"A5", from_cycles(5, {{{0, 1, 2}}, {{0, 1, 2, 3, 4}}}), {1, 3, 3, 4, 5}});
  cases.push_back({"Q8", from_cycles(8, {{{0, 1, 2, 3}, {4, 5, 6, 7}}, {{0, 4, 2, 6}, {1, 7, 3, 5}}}), {1, 1, 1, 1, 2}});
  cases.push_back({"SL(2,5)", sl2_group(5), {1, 2, 2, 3, 3, 4, 4, 5, 6}});
  SuiteRow row{"character tables", true, ""};
  for (const auto& c : cases) {
    const auto t = character_table(c.g, options);
    std::vector<long> d;
    for (std::size_t i = 0; i < t.size(); ++i) d.push_back(t.degree(i));
    std::sort(d.begin(), d.end());
    const bool ok = d == c.degrees && verify_orthogonality(t);
    row.pass = row.pass && ok;
    row.detail += std::string(row.detail.empty() ? "" : " ") + c.name + join(d) + (ok ? "" : "!");
  }
  return row;
}

SuiteRow psl19() {
  const std::array<std::size_t, 2> stab{1, 2};
  const auto r = psl_polytope({19, 2, 8, -7}, stab);
  bool type_c_m2_dim4 = false;
  for (const auto& e : r.cone->entries) {
    type_c_m2_dim4 |= e.type == RealType::C && e.multiplicity == 2 && e.subcone_dim == 4;
  }
  const bool ok = r.stringc.passes() && r.generation.generates && r.stringc.schlafli == std::vector<std::uint32_t>{9, 3} &&
                  r.stabilizer_order == 6 && r.weil.degree == 9 && r.weil_multiplicity == 2 && type_c_m2_dim4 &&
                  r.cone->all_checks_pass();
  return {"PSL(2,19) string C-group with a type C subcone of multiplicity 2", ok,
          "schlafli {" + std::to_string(r.stringc.schlafli[0]) + "," + std::to_string(r.stringc.schlafli[1]) +
              "} |H|=" + std::to_string(r.stabilizer_order) + " m=" + std::to_string(r.weil_multiplicity)};
}

SuiteRow weil() {
  SuiteRow row{"Weil characters of PSL(2,p), p = 7, 11, 19, 23", true, ""};
  for (unsigned p : {7U, 11U, 19U, 23U}) {
    const Group g = psl_group(p);
    const auto t = character_table(g);
    const auto w = weil_constituent_check(g, t, p);
    const bool ok = w.matches == 2 && w.chi != w.chi_bar;
    row.pass = row.pass && ok;
    row.detail += (row.detail.empty() ? "" : " ") + std::string("p=") + std::to_string(p) + ":deg" +
                  std::to_string(w.degree) + (ok ? "" : "!");
  }
  return row;
}

SuiteRow psl43(const TableOptions& options) {
  const auto r = counterexample_pipeline(43, 4, options);
  return {"PSL(2,43), y of order 7: multiplicity bound", r.bound_holds && r.polytope.cone->all_checks_pass(),
          "m=" + std::to_string(r.polytope.weil_multiplicity) + " bound=" + r.bound.get_str()};
}

SuiteRow sixhundred(const TableOptions& options) {
  const auto r = sixhundred_cell_report(options);
  std::vector<long> dims(r.dimensions.begin(), r.dimensions.end());
  return {"600-cell through SL(2,5) wr C2", r.passes(),
          std::to_string(r.layers) + " layers, dimensions " + join(dims)};
}

SuiteRow onetwenty(const TableOptions& options) {
  const auto r = validate_120cell(options);
  return {"120-cell multiplicity profile", r.profile_matches(),
          "m=1:" + std::to_string(r.multiplicity_one) + " m=2:" + join(r.multiplicity_two_degrees) +
              " m=3:" + join(r.multiplicity_three_degrees)};
}

SuiteRow crosscheck(const TableOptions& options) {
  const auto r = cross_check_600cell(options);
  return {"600-cell: icosian model agrees with the wreath model", r.passes(),
          std::to_string(r.h4_layers) + " layers, geometric row " + (r.geometric_row_found ? "found" : "missing")};
}

}  // namespace

std::vector<SuiteRow> run_suite(const TableOptions& options, const std::function<void(const SuiteRow&)>& progress) {
  const std::vector<std::pair<const char*, std::function<SuiteRow()>>> checks{
      {"character tables", [&] { return tables(options); }},
      {"PSL(2,19)", [] { return psl19(); }},
      {"Weil characters", [] { return weil(); }},
      {"PSL(2,43)", [&] { return psl43(options); }},
      {"600-cell", [&] { return sixhundred(options); }},
      {"120-cell", [&] { return onetwenty(options); }},
      {"600-cell cross-check", [&] { return crosscheck(options); }}};
  std::vector<SuiteRow> rows;
  for (const auto& [name, check] : checks) {
    const auto start = std::chrono::steady_clock::now();
    SuiteRow row;
    try {
      row = check();
    } catch (const Error& e) {
      row = {name, false, e.what()};
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (progress) progress(row);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace polyreal::cli
