#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace univjac {

/// (g,d) grid; an absent d bound means 2g-3 (or 0 for the lower bound).
struct GridSpec {
  std::int64_t g_min = 3;
  std::int64_t g_max = 10;
  std::optional<std::int64_t> d_min;
  std::optional<std::int64_t> d_max;

  std::int64_t d_lo(std::int64_t) const { return d_min.value_or(0); }
  std::int64_t d_hi(std::int64_t g) const { return d_max.value_or(2 * g - 3); }
};

/// Parses "g=3..8" and "d=0..max" style bounds into spec; DomainError on
/// malformed text.
void parse_grid_term(const std::string& term, GridSpec& spec);

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;  // first failure, or a count of what was checked
  double seconds;
};

inline constexpr std::uint64_t kAcceptanceSeed = 20240611;

std::vector<CriterionResult> run_acceptance(const GridSpec& grid = {},
                                            std::uint64_t seed = kAcceptanceSeed);

}  // namespace univjac
