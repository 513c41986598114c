#include "spanner/rational.hpp"

#include <cstdlib>

namespace spanner {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      std::size_t used = 0;
      const long long n = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Rational(n);
    }
    std::size_t used = 0;
    const long long n = std::stoll(text.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument(text);
    const std::string den_part = text.substr(slash + 1);
    const long long d = std::stoll(den_part, &used);
    if (used != den_part.size()) throw std::invalid_argument(text);
    return Rational(n, d);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse rational '" + text + "'");
  }
}

}  // namespace spanner
