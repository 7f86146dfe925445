#include "polyreal/json.hpp"

#include "polyreal/error.hpp"

namespace polyreal {

nlohmann::json cyclo_to_json(const Cyclo& x) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : x.basis_coeffs()) coeffs.push_back(c.get_str());
  return {{"order", x.order()}, {"coeffs", std::move(coeffs)}};
}

Cyclo cyclo_from_json(const nlohmann::json& j) {
  try {
    const auto order = j.at("order").get<std::uint32_t>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
    return Cyclo::from_basis_coeffs(order, coeffs);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad cyclotomic value: ") + e.what());
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, std::string("bad cyclotomic value: ") + e.what());
  }
}

}  // namespace polyreal
