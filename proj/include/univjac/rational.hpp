#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace univjac {

using Rational = boost::rational<std::int64_t>;

// "p" for integers, "p/q" otherwise; never a decimal.
std::string to_string(const Rational& q);

std::int64_t floor(const Rational& q);
std::int64_t ceil(const Rational& q);

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

// q - 1/2 is an integer.
inline bool is_half_integer(const Rational& q) {
  return q.denominator() == 2;
}

// a(a-1)/2, valid for negative a as well.
constexpr std::int64_t choose2(std::int64_t a) { return a * (a - 1) / 2; }

}  // namespace univjac
