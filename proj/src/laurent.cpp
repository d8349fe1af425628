#include "oddkh/laurent.hpp"

#include <sstream>

#include "oddkh/error.hpp"

namespace oddkh {

LaurentPoly LaurentPoly::monomial(int exponent, std::int64_t coef) {
  LaurentPoly p;
  p.add(exponent, coef);
  return p;
}

std::int64_t LaurentPoly::coefficient(int e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add(int exponent, std::int64_t coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) out.add(e1 + e2, c1 * c2);
  }
  return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  return out += o;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  return out -= o;
}

LaurentPoly LaurentPoly::scale_exponents(int factor) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.add(e * factor, c);
  return out;
}

LaurentPoly LaurentPoly::divide_exponents(int divisor) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    if (e % divisor != 0) {
      throw Error(ErrorKind::InvalidArgument, "exponent not divisible in substitution");
    }
    out.add(e / divisor, c);
  }
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.add(e + k, c);
  return out;
}

std::pair<std::int64_t, std::int64_t> LaurentPoly::at_i() const {
  std::int64_t re = 0;
  std::int64_t im = 0;
  for (const auto& [e, c] : terms_) {
    switch (((e % 4) + 4) % 4) {
      case 0: re += c; break;
      case 1: im += c; break;
      case 2: re -= c; break;
      default: im -= c; break;
    }
  }
  return {re, im};
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << var;
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

}  // namespace oddkh
