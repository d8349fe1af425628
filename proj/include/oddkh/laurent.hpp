#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace oddkh {

/// Integer Laurent polynomial in one variable; no zero coefficients stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int exponent, std::int64_t coef = 1);

  const std::map<int, std::int64_t>& terms() const { return terms_; }
  std::int64_t coefficient(int e) const;
  bool is_zero() const { return terms_.empty(); }
  void add(int exponent, std::int64_t coef);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  /// Multiplies every exponent by `factor` (exact substitution x -> x^factor).
  LaurentPoly scale_exponents(int factor) const;
  /// Divides every exponent by `divisor`; throws when some exponent is not divisible.
  LaurentPoly divide_exponents(int divisor) const;
  /// Shifts all exponents (multiplication by x^k).
  LaurentPoly shifted(int k) const;
  /// Value at x = i as a Gaussian integer (re, im).
  std::pair<std::int64_t, std::int64_t> at_i() const;

  /// e.g. "q^-2 + 1 - 2q^3"
  std::string to_string(const std::string& var = "q") const;

 private:
  std::map<int, std::int64_t> terms_;
};

}  // namespace oddkh
