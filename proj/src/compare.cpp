#include "univjac/compare.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace univjac {

std::vector<std::int64_t> smith_invariants(IntMatrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::int64_t> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Move the smallest nonzero entry of the remaining block to (t,t), then
    // clear its row and column; repeat until nothing else survives.
    for (;;) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r) {
        for (std::size_t c = t; c < cols; ++c) {
          if (a[r][c] != 0 && (pr == rows || std::llabs(a[r][c]) < std::llabs(a[pr][pc]))) {
            pr = r;
            pc = c;
          }
        }
      }
      if (pr == rows) {
        std::sort(diag.begin(), diag.end());
        return diag;
      }
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        const std::int64_t q = a[r][t] / a[t][t];
        for (std::size_t c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
        if (a[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        const std::int64_t q = a[t][c] / a[t][t];
        for (std::size_t r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
        if (a[t][c] != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: fold any entry not divisible by the pivot into row t
      bool divisible = true;
      for (std::size_t r = t + 1; r < rows && divisible; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (a[r][c] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[r][k];
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
    diag.push_back(std::llabs(a[t][t]));
  }
  std::sort(diag.begin(), diag.end());
  return diag;
}

BarJElement alpha_d(const GenusDegree& gd, int i) {
  const BarJacElement p = pullback_boundary(gd, i);
  std::map<std::string, std::int64_t> coeffs;
  for (const auto& [label, c] : p.coeffs()) coeffs[label] = c;
  return BarJElement(gd, coeffs);
}

CompareReport compare_report(const GenusDegree& gd) {
  const int top = static_cast<int>(gd.genus() / 2);
  const BoundaryTable table = boundary_table(gd);
  const std::vector<std::string> labels = table.labels();

  CompareReport out{};
  out.rank_cl_barj = top + 3;
  out.rank_cl_j = 2;
  out.boundary_count = labels.size();
  out.rank_pic_barj = 2 + static_cast<std::int64_t>(labels.size());
  out.rank_pic_j = 2;
  out.alpha_matrix.assign(labels.size(), std::vector<std::int64_t>(top + 1, 0));
  out.alpha_matches_pullback = true;

  for (int i = 0; i <= top; ++i) {
    const BarJElement a = alpha_d(gd, i);
    const BarJacElement p = pullback_boundary(gd, i);
    AlphaColumn col{i, {}, 0, "0"};
    for (std::size_t r = 0; r < labels.size(); ++r) {
      const std::int64_t c = a[labels[r]];
      out.alpha_matrix[r][i] = c;
      if (c != p[labels[r]]) out.alpha_matches_pullback = false;
      if (c == 0) continue;
      col.targets.push_back(labels[r]);
      col.coefficient = c;
    }
    if (col.targets.size() == 2) col.cokernel = "Z";
    else if (col.coefficient == 2) col.cokernel = "Z/2";
    out.columns.push_back(col);
  }

  out.elementary_divisors = smith_invariants(out.alpha_matrix);
  out.cokernel_free_rank =
      static_cast<std::int64_t>(labels.size()) - static_cast<std::int64_t>(out.elementary_divisors.size());
  for (std::int64_t e : out.elementary_divisors) {
    if (e > 1) out.cokernel_torsion.push_back(e);
  }
  return out;
}

PicJ0 pic_J0(const GenusDegree& gd) {
  if (gd.genus() == 3) return {{"Xi"}, {{"L10", 9}}};
  return {{"L10", "Xi"}, {}};
}

std::string to_string(const PicJ0& p) {
  std::string out;
  for (const auto& [gen, order] : p.torsion) {
    out += (out.empty() ? "" : " + ") + std::string("Z/") + std::to_string(order) + "*" + gen;
  }
  for (const auto& gen : p.free) out += (out.empty() ? "" : " + ") + std::string("Z*") + gen;
  return out;
}

}  // namespace univjac
