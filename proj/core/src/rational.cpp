#include "polyreal/rational.hpp"

#include <algorithm>
#include <cctype>

#include "polyreal/error.hpp"

namespace polyreal {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& part) {
    std::size_t i = (!part.empty() && part.front() == '-') ? 1 : 0;
    if (i == part.size()) return false;
    return std::all_of(part.begin() + static_cast<std::ptrdiff_t>(i), part.end(),
                       [](unsigned char c) { return std::isdigit(c); });
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-') {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  const Integer d{den};
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  Rational q{Integer{num}, d};
  q.canonicalize();
  return q;
}

}  // namespace polyreal
