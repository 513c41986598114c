#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "spanner/types.hpp"

namespace spanner {

// Exact rational with reduced int64 parts, den > 0. Stretch parameters are
// rationals so every bound comparison can be done by integer cross
// multiplication; floating point would make the completion loop's strict
// inequalities (and hence minimality and termination) nondeterministic.
struct Rational {
  std::int64_t num{0};
  std::int64_t den{1};

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }

  bool is_negative() const { return num < 0; }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// Accepts "n" or "n/d".
Rational parse_rational(const std::string& text);

using Int128 = __int128;

// dh > alpha * dg + beta * wmax, exactly. Pairs disconnected in the base
// graph (dg infinite) impose no constraint; dh infinite otherwise always
// violates.
inline bool violates_stretch(Distance dh, const Rational& alpha, Distance dg,
                             const Rational& beta, Weight wmax) {
  if (is_inf(dg)) return false;
  if (is_inf(dh)) return true;
  const Int128 lhs = Int128(dh) * alpha.den * beta.den;
  const Int128 rhs =
      Int128(alpha.num) * beta.den * dg + Int128(beta.num) * alpha.den * wmax;
  return lhs > rhs;
}

// dh > alpha * dg.
inline bool exceeds_ratio(Distance dh, const Rational& alpha, Distance dg) {
  if (is_inf(dg)) return false;
  if (is_inf(dh)) return true;
  return Int128(dh) * alpha.den > Int128(alpha.num) * dg;
}

// dh <= alpha * dg (false whenever dh is infinite and dg is not).
inline bool within_ratio(Distance dh, const Rational& alpha, Distance dg) {
  if (is_inf(dg)) return is_inf(dh) ? true : false;
  if (is_inf(dh)) return false;
  return Int128(dh) * alpha.den <= Int128(alpha.num) * dg;
}

// amount >= q * scale. Both sides finite.
inline bool at_least_fraction(Distance amount, const Rational& q, Weight scale) {
  return Int128(amount) * q.den >= Int128(q.num) * scale;
}

}  // namespace spanner
