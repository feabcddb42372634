#ifndef RKH_LAURENT_HPP
#define RKH_LAURENT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace rkh {

// Integer Laurent polynomial in q; zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::initializer_list<std::pair<const int, std::int64_t>> terms);
  static LaurentPoly monomial(int exponent, std::int64_t coeff = 1);

  void add(int exponent, std::int64_t coeff);
  std::int64_t coeff(int exponent) const;
  const std::map<int, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly shifted(int s) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return terms_ != o.terms_; }

  // e.g. "-2 - q^2 - q^4"
  std::string to_string(const std::string& var = "q") const;

 private:
  std::map<int, std::int64_t> terms_;
};

}  // namespace rkh

#endif
