#pragma once

#include <cstdint>

namespace univjac {

inline constexpr std::int64_t kMaxGenus = 10000;
inline constexpr std::int64_t kMaxAbsDegree = 1000000;

/// A genus/degree pair with g >= 3. Degrees of any sign are allowed.
class GenusDegree {
 public:
  GenusDegree(std::int64_t g, std::int64_t d);

  std::int64_t genus() const { return g_; }
  std::int64_t degree() const { return d_; }
  std::int64_t twog2() const { return 2 * g_ - 2; }

  friend bool operator==(const GenusDegree&, const GenusDegree&) = default;

 private:
  std::int64_t g_;
  std::int64_t d_;
};

struct Invariants {
  std::int64_t twog2;        // 2g-2
  std::int64_t G1;           // gcd(2g-2, d+g-1)
  std::int64_t k;            // (2g-2)/G1
  std::int64_t e;            // (d-g+1)/gcd(d-g+1, 2g-2), signed
  std::int64_t gerbe_order;  // gcd(d+1-g, 2g-2)

  friend bool operator==(const Invariants&, const Invariants&) = default;
};

Invariants invariants(const GenusDegree& gd);

std::int64_t k_dg(const GenusDegree& gd);
std::int64_t e_dg(const GenusDegree& gd);

/// True iff a positive divisor `a` divides b. The convention of the boundary
/// labels (k never divides -1, so i = 0 is always unsplit) is applied by
/// callers, not here.
constexpr bool divides(std::int64_t a, std::int64_t b) { return b % a == 0; }

/// Whether an m-Poincare line bundle exists on the universal curve over the
/// rigidified stack: the gerbe order must divide m.
bool poincare_exists(const GenusDegree& gd, std::int64_t m);

struct NormalizedDegree {
  std::int64_t d0;  // in [0, 2g-3]
  std::int64_t n;   // d = d0 + n(2g-2)

  friend bool operator==(const NormalizedDegree&, const NormalizedDegree&) = default;
};

NormalizedDegree normalize_degree(const GenusDegree& gd);

inline GenusDegree normalized(const GenusDegree& gd) {
  return {gd.genus(), normalize_degree(gd).d0};
}

}  // namespace univjac
