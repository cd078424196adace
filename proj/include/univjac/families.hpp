#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "univjac/arith.hpp"
#include "univjac/balanced.hpp"
#include "univjac/dual_graph.hpp"

namespace univjac {

enum class RowEntry { minus_one, zero, unknown };

std::string_view to_string(RowEntry e);

struct FamilyReport {
  std::string id;  // F, Fp1, Fp2, Fh1(h), Fh2(h)
  int h = 0;
  int variant = 0;
  std::string applicability;  // degree range in which the family is defined
  bool shared = false;        // Fh in case A: both variants are the same family
  DualGraph fiber;
  Multidegree multidegree;
  std::vector<std::pair<std::string, RowEntry>> row;  // in boundary-label order

  RowEntry entry(std::string_view label) const;
};

/// d must already lie in [0, 2g-2); DomainError otherwise.
FamilyReport family_F(const GenusDegree& gd);

/// NotApplicable outside 0 <= d <= g-1 (variant 1) or g-1 <= d < 2g-2 (variant 2).
FamilyReport family_Fprime(const GenusDegree& gd, int variant);

enum class FhCase { A, B };

struct FhIntegers {
  std::int64_t alpha1, alpha2, beta1, beta2;
  FhCase tag;
  friend bool operator==(const FhIntegers&, const FhIntegers&) = default;
};

/// RangeError unless 1 <= h <= (g-2)/2.
FhIntegers fh_integers(const GenusDegree& gd, int h);

FamilyReport family_Fh(const GenusDegree& gd, int h, int variant);

/// Fiber has total genus g and the multidegree is properly balanced on it.
bool verify_family(const GenusDegree& gd, const FamilyReport& r);

/// All family reports used by the independence argument, in row order.
std::vector<FamilyReport> independence_families(const GenusDegree& gd);

struct IndependenceMatrix {
  std::int64_t g = 0;
  std::int64_t d = 0;  // normalized
  std::vector<std::string> cols;
  std::vector<FamilyReport> rows;  // row j is the designated row of column j
  std::string verdict;
};

/// Normalizes d, assembles the rows and checks that the matrix is lower
/// triangular with -1 on the diagonal and unknowns only below it.
/// VerificationError when any of that fails.
IndependenceMatrix independence_matrix(const GenusDegree& gd);

}  // namespace univjac
