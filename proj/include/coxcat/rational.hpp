#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "coxcat/errors.hpp"

namespace coxcat {

// Exact rational with canonical form: gcd(num, den) = 1, den >= 1.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    ensure(den != 0, "rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace coxcat
