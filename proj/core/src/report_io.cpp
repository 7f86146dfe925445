#include "polyreal/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "polyreal/error.hpp"
#include "polyreal/json.hpp"

namespace polyreal {

namespace {

RealType parse_type(const std::string& s) {
  if (s == "R") return RealType::R;
  if (s == "C") return RealType::C;
  if (s == "H") return RealType::H;
  throw Error(ErrorCode::ParseError, "unknown real type '" + s + "'");
}

GelfandClass parse_gelfand(const std::string& s) {
  for (auto c : {GelfandClass::NotGelfand, GelfandClass::GelfandOverROnly, GelfandClass::Gelfand}) {
    if (s == to_string(c)) return c;
  }
  throw Error(ErrorCode::ParseError, "unknown Gelfand class '" + s + "'");
}

void require_schema(const nlohmann::json& j, const char* kind) {
  if (!j.is_object() || j.value("schema", "") != kSchema || j.value("kind", "") != kind) {
    throw Error(ErrorCode::ParseError, std::string("expected a ") + kSchema + " " + kind + " document");
  }
}

template <class F>
auto parse_guard(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string float_string(const Cyclo& x) {
  const auto z = x.to_complex();
  char buf[64];
  const double re = std::abs(z.real()) < 5e-13 ? 0.0 : z.real();
  if (std::abs(z.imag()) < 1e-12) {
    std::snprintf(buf, sizeof buf, "%.12f", re);
  } else {
    std::snprintf(buf, sizeof buf, "%.12f%+.12fi", re, z.imag());
  }
  return buf;
}

nlohmann::json cone_report_to_json(const ConeReport& r) {
  nlohmann::json sigma = nlohmann::json::array();
  for (const auto& e : r.entries) {
    sigma.push_back({{"index", e.sigma},
                     {"type", to_string(e.type)},
                     {"degree", e.degree},
                     {"norm", e.norm},
                     {"multiplicity", e.multiplicity},
                     {"subcone_dim", e.subcone_dim},
                     {"cone", e.cone}});
  }
  nlohmann::json layers = nlohmann::json::array();
  for (std::size_t i = 0; i < r.layer_reps.size(); ++i) {
    layers.push_back({{"rep", r.layer_reps[i]}, {"size", i < r.layer_sizes.size() ? r.layer_sizes[i] : 0}});
  }
  return {{"schema", kSchema},
          {"kind", "cone_report"},
          {"sigma", std::move(sigma)},
          {"layers", std::move(layers)},
          {"layer_count", r.layer_count},
          {"total_dimension", r.total_dimension},
          {"gelfand", to_string(r.gelfand)},
          {"checks",
           {{"layer_identity", r.layer_identity_real && r.layer_identity_complex},
            {"orthogonality", r.decomposition},
            {"layer_identity_real", r.layer_identity_real},
            {"layer_identity_complex", r.layer_identity_complex},
            {"decomposition", r.decomposition},
            {"subcone_dims", r.subcone_dims}}},
          {"all_checks_pass", r.all_checks_pass()}};
}

ConeReport cone_report_from_json(const nlohmann::json& j) {
  require_schema(j, "cone_report");
  return parse_guard([&] {
    ConeReport r;
    for (const auto& e : j.at("sigma")) {
      r.entries.push_back(SubconeEntry{e.at("index").get<std::size_t>(), parse_type(e.at("type").get<std::string>()),
                                       e.at("degree").get<long>(), e.at("norm").get<int>(),
                                       e.at("multiplicity").get<long>(), e.at("subcone_dim").get<long>(),
                                       e.at("cone").get<std::string>()});
    }
    for (const auto& l : j.at("layers")) {
      r.layer_reps.push_back(l.at("rep").get<Point>());
      r.layer_sizes.push_back(l.at("size").get<std::size_t>());
    }
    r.layer_count = j.at("layer_count").get<long>();
    if (static_cast<std::size_t>(r.layer_count) != r.layer_reps.size()) {
      throw Error(ErrorCode::ParseError, "layer_count disagrees with the layer list");
    }
    r.total_dimension = j.at("total_dimension").get<long>();
    r.gelfand = parse_gelfand(j.at("gelfand").get<std::string>());
    const auto& c = j.at("checks");
    r.layer_identity_real = c.at("layer_identity_real").get<bool>();
    r.layer_identity_complex = c.at("layer_identity_complex").get<bool>();
    r.decomposition = c.at("decomposition").get<bool>();
    r.subcone_dims = c.at("subcone_dims").get<bool>();
    return r;
  });
}

std::string cone_report_csv(const ConeReport& r) {
  std::ostringstream out;
  out << "sigma,type,degree,norm,multiplicity,subcone_dim,cone\n";
  for (const auto& e : r.entries) {
    out << e.sigma << ',' << to_string(e.type) << ',' << e.degree << ',' << e.norm << ',' << e.multiplicity << ','
        << e.subcone_dim << ',' << csv_escape(e.cone) << '\n';
  }
  out << "\nkey,value\n";
  out << "schema," << kSchema << '\n';
  out << "layer_count," << r.layer_count << '\n';
  out << "total_dimension," << r.total_dimension << '\n';
  out << "gelfand," << to_string(r.gelfand) << '\n';
  out << "layer_identity_real," << r.layer_identity_real << '\n';
  out << "layer_identity_complex," << r.layer_identity_complex << '\n';
  out << "decomposition," << r.decomposition << '\n';
  out << "subcone_dims," << r.subcone_dims << '\n';
  return out.str();
}

std::string cone_report_text(const ConeReport& r) {
  std::ostringstream out;
  out << "layers: " << r.layer_count << " (sizes";
  for (auto s : r.layer_sizes) out << ' ' << s;
  out << ")\n";
  char line[160];
  std::snprintf(line, sizeof line, "%6s %4s %7s %5s %4s %6s  %s\n", "sigma", "type", "degree", "norm", "m", "dim",
                "subcone");
  out << line;
  for (const auto& e : r.entries) {
    std::snprintf(line, sizeof line, "%6zu %4s %7ld %5d %4ld %6ld  %s\n", e.sigma, to_string(e.type), e.degree, e.norm,
                  e.multiplicity, e.subcone_dim, e.cone.c_str());
    out << line;
  }
  out << "total dimension: " << r.total_dimension << '\n';
  out << "gelfand: " << to_string(r.gelfand) << '\n';
  out << "layer identity (real): " << yes_no(r.layer_identity_real) << '\n';
  out << "layer identity (complex): " << yes_no(r.layer_identity_complex) << '\n';
  out << "idempotent decomposition: " << yes_no(r.decomposition) << '\n';
  out << "subcone dimensions: " << yes_no(r.subcone_dims) << '\n';
  return out.str();
}

CosineTable cosine_table(const GSetAnalysis& a) {
  CosineTable t;
  t.layer_reps.assign(a.layers().reps.begin(), a.layers().reps.end());
  t.layer_sizes = a.layers().sizes;
  for (std::size_t s = 0; s < a.real_irreducibles().size(); ++s) {
    const long m = a.multiplicities()[s];
    if (m == 0) continue;
    const auto& sigma = a.real_irreducibles()[s];
    std::string label = "s" + std::to_string(s) + ":" + to_string(sigma.type) + std::to_string(sigma.degree);
    if (m == 1) {
      t.values.push_back(cosine_vector_pure(a, s));
    } else {
      label = "balanced:" + label;
      t.values.push_back(balanced_cosine_vector(a, s));
    }
    t.row_labels.push_back(std::move(label));
  }
  return t;
}

nlohmann::json cosine_table_to_json(const CosineTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& v : t.values[i]) {
      cells.push_back({{"exact", v.to_string()}, {"value", cyclo_to_json(v)}, {"float", float_string(v)}});
    }
    rows.push_back({{"label", t.row_labels[i]}, {"cells", std::move(cells)}});
  }
  return {{"schema", kSchema},
          {"kind", "cosine_table"},
          {"layers", {{"reps", t.layer_reps}, {"sizes", t.layer_sizes}}},
          {"rows", std::move(rows)}};
}

CosineTable cosine_table_from_json(const nlohmann::json& j) {
  require_schema(j, "cosine_table");
  return parse_guard([&] {
    CosineTable t;
    t.layer_reps = j.at("layers").at("reps").get<std::vector<std::size_t>>();
    t.layer_sizes = j.at("layers").at("sizes").get<std::vector<std::size_t>>();
    for (const auto& row : j.at("rows")) {
      t.row_labels.push_back(row.at("label").get<std::string>());
      std::vector<Cyclo> values;
      for (const auto& cell : row.at("cells")) values.push_back(cyclo_from_json(cell.at("value")));
      if (values.size() != t.layer_sizes.size()) throw Error(ErrorCode::ParseError, "row length mismatch");
      t.values.push_back(std::move(values));
    }
    return t;
  });
}

std::string cosine_table_csv(const CosineTable& t) {
  std::ostringstream out;
  out << "character";
  for (std::size_t i = 0; i < t.layer_sizes.size(); ++i) out << ",L" << i << "_exact,L" << i << "_float";
  out << "\nlayer_size";
  for (auto s : t.layer_sizes) out << ',' << s << ',' << s;
  out << '\n';
  for (std::size_t r = 0; r < t.values.size(); ++r) {
    out << csv_escape(t.row_labels[r]);
    for (const auto& v : t.values[r]) out << ',' << csv_escape(v.to_string()) << ',' << float_string(v);
    out << '\n';
  }
  return out.str();
}

std::string cosine_table_text(const CosineTable& t) {
  std::ostringstream out;
  out << "layer sizes:";
  for (auto s : t.layer_sizes) out << ' ' << s;
  out << '\n';
  for (std::size_t r = 0; r < t.values.size(); ++r) {
    out << t.row_labels[r] << '\n';
    for (std::size_t i = 0; i < t.values[r].size(); ++i) {
      out << "  L" << i << "  " << t.values[r][i].to_string() << "  ~ " << float_string(t.values[r][i]) << '\n';
    }
  }
  return out.str();
}

}  // namespace polyreal
