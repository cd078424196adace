#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "univjac/arith.hpp"
#include "univjac/picard.hpp"

namespace univjac {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Nonzero elementary divisors d1 | d2 | ... of an integer matrix.
std::vector<std::int64_t> smith_invariants(IntMatrix a);

/// Image of the i-th boundary class of the moduli scheme's class group.
BarJElement alpha_d(const GenusDegree& gd, int i);

struct AlphaColumn {
  int i;
  std::vector<std::string> targets;
  std::int64_t coefficient;  // 1, or 2 at the half-genus divisor
  std::string cokernel;      // "0", "Z" or "Z/2"
};

struct CompareReport {
  std::int64_t rank_cl_barj;
  std::int64_t rank_cl_j;
  std::int64_t rank_pic_barj;
  std::int64_t rank_pic_j;
  std::size_t boundary_count;
  std::vector<AlphaColumn> columns;
  IntMatrix alpha_matrix;               // rows: barJ boundary labels, cols: i = 0..g/2
  std::vector<std::int64_t> elementary_divisors;
  std::int64_t cokernel_free_rank;
  std::vector<std::int64_t> cokernel_torsion;
  bool alpha_matches_pullback;
};

CompareReport compare_report(const GenusDegree& gd);

struct PicJ0 {
  std::vector<std::string> free;
  std::vector<std::pair<std::string, std::int64_t>> torsion;  // generator, order
};

PicJ0 pic_J0(const GenusDegree& gd);

std::string to_string(const PicJ0& p);

}  // namespace univjac
