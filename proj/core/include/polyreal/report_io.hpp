#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polyreal/realization.hpp"

namespace polyreal {

/// Version tag carried by every JSON document.
inline constexpr const char* kSchema = "polyreal/1";

nlohmann::json cone_report_to_json(const ConeReport& report);
/// Throws ParseError on a wrong schema tag or malformed fields.
ConeReport cone_report_from_json(const nlohmann::json& j);
/// One row per subcone, then a summary block.
std::string cone_report_csv(const ConeReport& report);
std::string cone_report_text(const ConeReport& report);

/// Rows are characters, columns are layers.
struct CosineTable {
  std::vector<std::string> row_labels;
  std::vector<std::size_t> layer_reps;
  std::vector<std::size_t> layer_sizes;
  std::vector<std::vector<Cyclo>> values;

  friend bool operator==(const CosineTable&, const CosineTable&) = default;
};

/// Pure rows (m = 1) from cosine_vector_pure, other occurring rows from
/// balanced_cosine_vector with a "balanced:" label prefix.
CosineTable cosine_table(const GSetAnalysis& a);

nlohmann::json cosine_table_to_json(const CosineTable& t);
CosineTable cosine_table_from_json(const nlohmann::json& j);
/// Two columns per layer: the exact value and a float rendering.
std::string cosine_table_csv(const CosineTable& t);
std::string cosine_table_text(const CosineTable& t);

/// Fixed-precision rendering of the real part, with "+...i" when non-real.
std::string float_string(const Cyclo& x);

}  // namespace polyreal
