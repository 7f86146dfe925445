// polyreal: realization cones of transitive G-sets from the command line.
//
// Exit codes: 0 success, 1 negative answer (stringc only), 2 bad input,
// 3 enumeration cap exceeded, 4 an internal identity check failed.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <polyreal/error.hpp>
#include <polyreal/gset.hpp>
#include <polyreal/report_io.hpp>
#include <polyreal/stringc.hpp>
#include <polyreal/wreath.hpp>

#include "group_spec.hpp"
#include "suite.hpp"

using namespace polyreal;

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitCheck = 4;

struct Common {
  std::string group_file;
  std::string stabilizer;
  std::string format = "table";
  std::optional<std::string> cache;
  std::size_t max_order = Group::kDefaultCap;
  unsigned threads = 1;

  TableOptions table_options() const {
    TableOptions o;
    o.threads = threads;
    if (cache) {
      o.cache_dir = *cache;
    } else if (std::getenv("POLYREAL_CACHE") != nullptr) {
      o.cache_dir = default_cache_dir();
    }
    return o;
  }
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidParams:
    case ErrorCode::NotPrime:
    case ErrorCode::PrimeTooLarge:
    case ErrorCode::RankTooLarge:
    case ErrorCode::DegreeMismatch:
      return kExitInput;
    case ErrorCode::CapExceeded:
      return kExitCap;
    default:
      return kExitCheck;
  }
}

template <class F>
int guarded(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    std::cerr << "polyreal: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "polyreal: " << e.what() << '\n';
    return kExitCheck;
  }
}

GSetAnalysis analyze(const Common& c) {
  const auto g = cli::load_group_file(c.group_file, c.max_order);
  const auto gens = cli::parse_words(g, c.stabilizer);
  const Subgroup h = subgroup_generated(*g.group, gens);
  auto table = std::make_shared<const CharacterTable>(character_table(*g.group, c.table_options()));
  return analyze_gset(GSet::cosets(g.group, h), table);
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_cone_report(const Common& c) {
  const GSetAnalysis a = analyze(c);
  const ConeReport r = cone_report(a);
  if (c.format == "json") {
    auto j = cone_report_to_json(r);
    j["group_order"] = a.gset().group().order();
    j["stabilizer_order"] = a.gset().stabilizer().order();
    j["vertices"] = a.gset().size();
    print_json(j);
  } else if (c.format == "csv") {
    std::cout << cone_report_csv(r);
  } else {
    std::cout << "group order: " << a.gset().group().order() << ", stabilizer order: " << a.gset().stabilizer().order()
              << ", vertices: " << a.gset().size() << '\n'
              << cone_report_text(r);
  }
  return r.all_checks_pass() ? 0 : kExitCheck;
}

int cmd_cosine(const Common& c) {
  const GSetAnalysis a = analyze(c);
  const CosineTable t = cosine_table(a);
  if (c.format == "json") {
    print_json(cosine_table_to_json(t));
  } else if (c.format == "csv") {
    std::cout << cosine_table_csv(t);
  } else {
    std::cout << cosine_table_text(t);
  }
  return 0;
}

int cmd_stringc(const Common& c, const std::string& generators) {
  const auto g = cli::load_group_file(c.group_file, c.max_order);
  std::string words = generators;
  if (words.empty()) {
    for (const auto& n : g.generator_names) words += (words.empty() ? "" : ",") + n;
  }
  const auto gens = cli::parse_words(g, words);
  const StringCReport r = verify_string_cgroup(*g.group, gens);
  if (c.format == "json") {
    nlohmann::json j{{"schema", kSchema},
                     {"kind", "stringc"},
                     {"group_order", g.group->order()},
                     {"involutions", r.involutions},
                     {"string_condition", r.string_condition},
                     {"intersection_property", r.intersection_property},
                     {"schlafli", r.schlafli},
                     {"string_c", r.passes()},
                     {"passes", r.passes()}};
    if (g.psl && generators.empty()) {
      // Weil multiplicity on the cosets of <s0,s1>, or of --stabilizer if given.
      const auto& params = *g.psl;
      std::vector<std::size_t> stab{0, 1};
      if (!c.stabilizer.empty()) {
        stab.clear();
        for (Index x : cli::parse_words(g, c.stabilizer)) {
          for (std::size_t i = 0; i < 3; ++i) {
            if (g.generators.at(g.generator_names[i]) == x) stab.push_back(i);
          }
        }
      }
      const auto rep = psl_polytope(params, stab, c.table_options());
      Rational bound = Rational(static_cast<long>(params.p) - 1, 28) - Rational(13, 14);
      bound.canonicalize();
      j["p"] = params.p;
      j["y"] = params.y;
      j["a"] = params.a;
      j["b"] = params.b;
      j["weil"] = {{"degree", rep.weil.degree}, {"multiplicity", rep.weil_multiplicity}};
      j["bound"] = bound.get_str();
    }
    print_json(j);
  } else {
    std::cout << "group order: " << g.group->order() << '\n'
              << "involutions: " << (r.involutions ? "yes" : "no") << '\n'
              << "string condition: " << (r.string_condition ? "yes" : "no") << '\n'
              << "intersection property: " << (r.intersection_property ? "yes" : "no") << '\n'
              << "schlafli:";
    for (auto o : r.schlafli) std::cout << ' ' << o;
    std::cout << '\n' << (r.passes() ? "string C-group" : "not a string C-group") << '\n';
  }
  return r.passes() ? 0 : kExitNegative;
}

int cmd_psl_search(const Common& c, unsigned p_min, unsigned p_max) {
  nlohmann::json results = nlohmann::json::array();
  for (unsigned p = p_min; p <= std::min(p_max, kMaxPslPrime); ++p) {
    bool prime = p > 2;
    for (unsigned d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
    if (!prime || p % 4 != 3) continue;
    const PslSearchResult r = psl_order3_search(p);
    const Group g = psl_group(p);
    nlohmann::json gens = nlohmann::json::array();
    if (r.found) {
      for (Index s : r.generators) gens.push_back(g.element(s).to_cycle_string());
    }
    results.push_back({{"p", p},
                       {"found", r.found},
                       {"schlafli", r.schlafli},
                       {"generators", gens},
                       {"candidates_tried", r.candidates_tried}});
  }
  if (c.format == "json") {
    print_json({{"schema", kSchema}, {"kind", "psl_search"}, {"results", results}});
  } else {
    for (const auto& r : results) {
      std::cout << "p=" << r["p"].get<unsigned>() << ": ";
      if (r["found"].get<bool>()) {
        std::cout << "found, schlafli {" << r["schlafli"][0].get<unsigned>() << "," << r["schlafli"][1].get<unsigned>()
                  << "} after " << r["candidates_tried"].get<std::size_t>() << " candidates\n";
        for (const auto& s : r["generators"]) std::cout << "  " << s.get<std::string>() << '\n';
      } else {
        std::cout << "none among " << r["candidates_tried"].get<std::size_t>() << " candidates\n";
      }
    }
  }
  return 0;
}

int cmd_wreath(const Common& c) {
  const SixHundredCellReport r = sixhundred_cell_report(c.table_options());
  CosineTable t;
  t.layer_reps.assign(r.cone.layer_reps.begin(), r.cone.layer_reps.end());
  t.layer_sizes = r.layer_sizes;
  t.values = r.cosine_table;
  for (std::size_t i = 0; i < r.cosine_table.size(); ++i) t.row_labels.push_back("phi" + std::to_string(i));
  if (c.format == "json") {
    print_json({{"schema", kSchema},
                {"kind", "wreath_600"},
                {"wreath_order", r.wreath_order},
                {"center_order", r.center_order},
                {"quotient_order", r.quotient_order},
                {"vertices", r.vertices},
                {"layers", r.layers},
                {"double_cosets", r.double_cosets},
                {"symmetrized_classes", r.symmetrized_classes},
                {"dimensions", r.dimensions},
                {"layer_class", r.layer_class},
                {"multiplicity_free", r.multiplicity_free},
                {"cosines_match", r.cosines_match},
                {"spherical_match", r.spherical_match},
                {"gelfand", to_string(r.gelfand)},
                {"cone", cone_report_to_json(r.cone)},
                {"cosine_table", cosine_table_to_json(t)},
                {"passes", r.passes()}});
  } else if (c.format == "csv") {
    std::cout << cosine_table_csv(t);
  } else {
    std::cout << "SL(2,5) wr C2: order " << r.wreath_order << ", center " << r.center_order << ", quotient "
              << r.quotient_order << ", vertices " << r.vertices << '\n'
              << "layers " << r.layers << ", double cosets " << r.double_cosets << ", symmetrized classes "
              << r.symmetrized_classes << '\n'
              << "pure dimensions:";
    for (long d : r.dimensions) std::cout << ' ' << d;
    std::cout << "\nprojection cosines equal phi(u)/phi(1): " << (r.cosines_match ? "yes" : "no")
              << "\nspherical functions equal phi(u)/phi(1): " << (r.spherical_match ? "yes" : "no")
              << "\ngelfand: " << to_string(r.gelfand) << "\n\n"
              << cosine_table_text(t);
  }
  return r.passes() ? 0 : kExitCheck;
}

int cmd_suite(const Common& c, bool timings) {
  bool all = true;
  const auto rows = cli::run_suite(c.table_options(), [&](const cli::SuiteRow& row) {
    all = all && row.pass;
    std::cout << (row.pass ? "PASS" : "FAIL") << "  " << row.name << "  [" << row.detail << "]";
    if (timings) std::cout << "  " << row.seconds << "s";
    std::cout << std::endl;
  });
  std::cout << (all ? "all checks passed" : "some checks FAILED") << " (" << rows.size() << " checks)\n";
  return all ? 0 : kExitCheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact realization cones of transitive G-sets"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--group", common.group_file, "Group spec JSON file");
  app.add_option("--stabilizer", common.stabilizer, "Stabilizer generators as words, e.g. \"s0*s1,s2\"");
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--cache", common.cache, "Character table cache directory (overrides POLYREAL_CACHE)");
  app.add_option("--max-order", common.max_order, "Largest group order to enumerate")->check(CLI::PositiveNumber);
  app.add_option("--threads", common.threads, "Worker threads for character tables")->check(CLI::Range(1U, 256U));

  auto* cone = app.add_subcommand("cone-report", "Realization cone report of the cosets of the stabilizer");
  auto* cosine = app.add_subcommand("cosine", "Cosine vectors per layer");
  auto* stringc = app.add_subcommand("stringc", "Check the string C-group axioms");
  std::string generators;
  stringc->add_option("--generators", generators, "Generator words (default: all declared generators)");
  auto* search = app.add_subcommand("psl-search", "Search PSL(2,p), p = 3 mod 4, for string C-groups with ord(s0 s1) = 3");
  unsigned p_min = 19, p_max = 47;
  search->add_option("--p-min", p_min, "Smallest prime");
  search->add_option("--p-max", p_max, "Largest prime (at most 50)");
  auto* wreath = app.add_subcommand("wreath", "The 600-cell through SL(2,5) wr C2");
  auto* suite = app.add_subcommand("suite", "Run every reference reproduction check");
  bool timings = false;
  suite->add_flag("--timings", timings, "Print the time per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  auto need_group = [&](CLI::App* sub) {
    if (common.group_file.empty()) {
      std::cerr << "polyreal " << sub->get_name() << ": --group is required\n";
      return false;
    }
    return true;
  };

  if (*cone) return need_group(cone) ? guarded([&] { return cmd_cone_report(common); }) : kExitInput;
  if (*cosine) return need_group(cosine) ? guarded([&] { return cmd_cosine(common); }) : kExitInput;
  if (*stringc) return need_group(stringc) ? guarded([&] { return cmd_stringc(common, generators); }) : kExitInput;
  if (*search) return guarded([&] { return cmd_psl_search(common, p_min, p_max); });
  if (*wreath) return guarded([&] { return cmd_wreath(common); });
  if (*suite) return guarded([&] { return cmd_suite(common, timings); });
  return kExitInput;
}
