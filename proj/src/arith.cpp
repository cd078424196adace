#include "univjac/arith.hpp"

#include <numeric>
#include <string>

#include "univjac/errors.hpp"

namespace univjac {

GenusDegree::GenusDegree(std::int64_t g, std::int64_t d) : g_(g), d_(d) {
  if (g < 3) {
    throw DomainError("genus must be at least 3 (got " + std::to_string(g) + ")");
  }
  if (g > kMaxGenus) {
    throw DomainError("genus exceeds supported maximum " + std::to_string(kMaxGenus));
  }
  if (d > kMaxAbsDegree || d < -kMaxAbsDegree) {
    throw DomainError("|d| exceeds supported maximum " + std::to_string(kMaxAbsDegree));
  }
}

std::int64_t k_dg(const GenusDegree& gd) {
  const std::int64_t g = gd.genus();
  return gd.twog2() / std::gcd(gd.twog2(), gd.degree() + g - 1);
}

std::int64_t e_dg(const GenusDegree& gd) {
  const std::int64_t chi = gd.degree() - gd.genus() + 1;
  return chi / std::gcd(chi, gd.twog2());
}

Invariants invariants(const GenusDegree& gd) {
  const std::int64_t g = gd.genus();
  const std::int64_t d = gd.degree();
  Invariants inv{};
  inv.twog2 = gd.twog2();
  inv.G1 = std::gcd(inv.twog2, d + g - 1);
  inv.k = inv.twog2 / inv.G1;
  inv.e = e_dg(gd);
  inv.gerbe_order = std::gcd(d + 1 - g, inv.twog2);
  return inv;
}

bool poincare_exists(const GenusDegree& gd, std::int64_t m) {
  if (m < 1) throw DomainError("m must be a positive integer");
  return m % invariants(gd).gerbe_order == 0;
}

NormalizedDegree normalize_degree(const GenusDegree& gd) {
  const std::int64_t period = gd.twog2();
  std::int64_t d0 = gd.degree() % period;
  if (d0 < 0) d0 += period;
  return {d0, (gd.degree() - d0) / period};
}

}  // namespace univjac
