#include "rkh/laurent.hpp"

#include <sstream>

namespace rkh {

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const int, std::int64_t>> terms) {
  for (const auto& [e, c] : terms) add(e, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, std::int64_t coeff) {
  LaurentPoly p;
  p.add(exponent, coeff);
  return p;
}

void LaurentPoly::add(int exponent, std::int64_t coeff) {
  if (coeff == 0) return;
  auto& c = terms_[exponent];
  c += coeff;
  if (c == 0) terms_.erase(exponent);
}

std::int64_t LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

LaurentPoly LaurentPoly::shifted(int s) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e + s] = c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  out += o;
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out.add(e1 + e2, c1 * c2);
  return out;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << var;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

}  // namespace rkh
