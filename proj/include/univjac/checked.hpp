#pragma once

#include <cstdint>

#include "univjac/errors.hpp"

namespace univjac {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw RangeError("integer overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw RangeError("integer overflow");
  return r;
}

}  // namespace univjac
