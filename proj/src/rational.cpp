#include "univjac/rational.hpp"

namespace univjac {

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::int64_t floor(const Rational& q) {
  const std::int64_t n = q.numerator();
  const std::int64_t m = q.denominator();  // always positive
  std::int64_t f = n / m;
  if (n % m != 0 && n < 0) --f;
  return f;
}

std::int64_t ceil(const Rational& q) { return -floor(-q); }

}  // namespace univjac
