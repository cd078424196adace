#include "univjac/families.hpp"

#include "univjac/errors.hpp"
#include "univjac/picard.hpp"

namespace univjac {

std::string_view to_string(RowEntry e) {
  switch (e) {
    case RowEntry::minus_one: return "-1";
    case RowEntry::zero: return "0";
    case RowEntry::unknown: return "?";
  }
  return {};
}

RowEntry FamilyReport::entry(std::string_view label) const {
  for (const auto& [l, e] : row) {
    if (l == label) return e;
  }
  throw DomainError("no column '" + std::string(label) + "'");
}

namespace {

void require_normalized(const GenusDegree& gd) {
  if (gd.degree() < 0 || gd.degree() >= gd.twog2()) {
    throw DomainError("family construction needs 0 <= d < 2g-2 (got d=" +
                      std::to_string(gd.degree()) + "); normalize the degree first");
  }
}

int ig(const GenusDegree& gd) { return static_cast<int>(gd.genus()); }

// Row over every boundary label; `rule` maps a label to its entry.
template <typename Rule>
std::vector<std::pair<std::string, RowEntry>> make_row(const GenusDegree& gd, Rule rule) {
  std::vector<std::pair<std::string, RowEntry>> out;
  for (const BoundaryEntry& e : boundary_table(gd).entries) out.emplace_back(e.label.name(), rule(e.label));
  return out;
}

// Nearest integer, or (floor, ceil) at a half-integer.
std::pair<std::int64_t, std::int64_t> bracket(const Rational& x) {
  if (is_half_integer(x)) return {floor(x), ceil(x)};
  const std::int64_t r = floor(x + Rational(1, 2));
  return {r, r};
}

}  // namespace

FamilyReport family_F(const GenusDegree& gd) {
  require_normalized(gd);
  const int g = ig(gd);
  DualGraph fiber({{"C", g - 3}, {"R1", 0}, {"R2", 0}},
                  {{"R1", "R2"}, {"C", "R1"}, {"C", "R1"}, {"C", "R2"}, {"C", "R2"}});
  auto row = make_row(gd, [](const BoundaryLabel& l) {
    return l.i == 0 ? RowEntry::minus_one : RowEntry::zero;
  });
  return {"F", 0, 0, "0 <= d < 2g-2", false, std::move(fiber), Multidegree{{gd.degree(), 0, 0}},
          std::move(row)};
}

FamilyReport family_Fprime(const GenusDegree& gd, int variant) {
  require_normalized(gd);
  const int g = ig(gd);
  const std::int64_t d = gd.degree();
  if (variant != 1 && variant != 2) throw DomainError("variant must be 1 or 2");
  if (variant == 1 && d > g - 1) throw NotApplicable("F'_1 is defined for 0 <= d <= g-1");
  if (variant == 2 && d < g - 1) throw NotApplicable("F'_2 is defined for g-1 <= d < 2g-2");

  // k_{R1} = 3, k_{R2+E} = 2, k_E = 1.
  DualGraph fiber({{"C", g - 3}, {"E", 1}, {"R1", 0}, {"R2", 0}},
                  {{"C", "R1"}, {"C", "R1"}, {"C", "R2"}, {"R1", "R2"}, {"R2", "E"}});
  Multidegree md = variant == 1 ? Multidegree{{d, 0, 0, 0}} : Multidegree{{d - 3, 1, 1, 1}};
  auto row = make_row(gd, [variant](const BoundaryLabel& l) {
    if (l.i == 0) return RowEntry::unknown;
    if (l.i > 1) return RowEntry::zero;
    switch (l.kind) {
      case BoundaryKind::split_first: return variant == 1 ? RowEntry::minus_one : RowEntry::zero;
      case BoundaryKind::split_second: return variant == 2 ? RowEntry::minus_one : RowEntry::zero;
      default: return RowEntry::minus_one;
    }
  });
  return {variant == 1 ? "Fp1" : "Fp2", 0, variant,
          variant == 1 ? "0 <= d <= g-1" : "g-1 <= d < 2g-2", false, std::move(fiber),
          std::move(md), std::move(row)};
}

FhIntegers fh_integers(const GenusDegree& gd, int h) {
  const std::int64_t g = gd.genus(), d = gd.degree();
  if (h < 1 || 2 * h > g - 2) {
    throw RangeError("h=" + std::to_string(h) + " outside [1, (g-2)/2] for g=" + std::to_string(g));
  }
  const Rational a(d * (2 * g - 2 * h - 3), 2 * g - 2);
  const Rational b(d * (2 * h - 1), 2 * g - 2);
  const auto [a1, a2] = bracket(a);
  const auto [b1, b2] = bracket(b);
  const FhCase tag = is_half_integer(a) ? FhCase::B : FhCase::A;
  if ((tag == FhCase::A) != !divides(k_dg(gd), 2 * h + 1)) {
    throw VerificationError("case split disagrees with divisibility of 2h+1");
  }
  return {a1, a2, b1, b2, tag};
}

FamilyReport family_Fh(const GenusDegree& gd, int h, int variant) {
  require_normalized(gd);
  if (variant != 1 && variant != 2) throw DomainError("variant must be 1 or 2");
  const FhIntegers fi = fh_integers(gd, h);
  const int g = ig(gd);
  const std::int64_t d = gd.degree();

  // Star: C1, C2 and the elliptic tail each meet E once.
  DualGraph fiber({{"C1", h}, {"C2", g - h - 1}, {"Gamma", 1}, {"E", 0}},
                  {{"C1", "E"}, {"C2", "E"}, {"Gamma", "E"}});

  std::int64_t beta = fi.beta1, alpha = fi.alpha1, gamma = 0, e = 0;
  if (fi.tag == FhCase::A) {
    const std::int64_t s = d - alpha - beta;
    if (s == 0) {
      gamma = e = 0;
    } else if (s == 1) {
      gamma = d > g - 1 ? 1 : 0;
      e = 1 - gamma;
    } else if (s == 2) {
      gamma = e = 1;
    } else {
      throw VerificationError("F_h case A leaves degree " + std::to_string(s) + " for Gamma and E");
    }
  } else {
    if (variant == 1) {
      beta = fi.beta2;
      gamma = d <= g - 1 ? 0 : 1;
    } else {
      alpha = fi.alpha2;
      gamma = d >= g - 1 ? 1 : 0;
    }
    e = d - alpha - beta - gamma;
    if (e != 0 && e != 1) throw VerificationError("F_h case B gives degree " + std::to_string(e) + " on E");
  }

  const bool shared = fi.tag == FhCase::A;
  auto row = make_row(gd, [&](const BoundaryLabel& l) {
    if (l.i <= h) return RowEntry::unknown;
    if (l.i > h + 1) return RowEntry::zero;
    switch (l.kind) {
      case BoundaryKind::split_first: return variant == 1 ? RowEntry::minus_one : RowEntry::zero;
      case BoundaryKind::split_second: return variant == 2 ? RowEntry::minus_one : RowEntry::zero;
      default: return (variant == 1 || shared) ? RowEntry::minus_one : RowEntry::unknown;
    }
  });
  const std::string id = "Fh" + std::to_string(shared ? 1 : variant) + "(" + std::to_string(h) + ")";
  return {id, h, shared ? 1 : variant, "0 <= d < 2g-2", shared, std::move(fiber),
          Multidegree{{beta, alpha, gamma, e}}, std::move(row)};
}

bool verify_family(const GenusDegree& gd, const FamilyReport& r) {
  return r.fiber.total_genus() == gd.genus() && r.multidegree.total() == gd.degree() &&
         is_properly_balanced(r.fiber, r.multidegree);
}

std::vector<FamilyReport> independence_families(const GenusDegree& gd) {
  const std::int64_t g = gd.genus(), d = gd.degree();
  std::vector<FamilyReport> rows{family_F(gd)};
  if (d <= g - 1) rows.push_back(family_Fprime(gd, 1));
  if (d >= g - 1) rows.push_back(family_Fprime(gd, 2));
  for (int h = 1; 2 * h <= g - 2; ++h) {
    rows.push_back(family_Fh(gd, h, 1));
    if (splits(gd, h + 1) && 2 * (h + 1) != g) rows.push_back(family_Fh(gd, h, 2));
  }
  return rows;
}

IndependenceMatrix independence_matrix(const GenusDegree& input) {
  const GenusDegree gd = normalized(input);
  IndependenceMatrix m{gd.genus(), gd.degree(), basis(gd, Space::barjac), independence_families(gd), ""};
  m.cols.erase(m.cols.begin(), m.cols.begin() + 3);

  if (m.rows.size() != m.cols.size()) {
    throw VerificationError(std::to_string(m.rows.size()) + " families for " +
                            std::to_string(m.cols.size()) + " boundary columns");
  }
  for (std::size_t j = 0; j < m.rows.size(); ++j) {
    const FamilyReport& r = m.rows[j];
    if (!verify_family(gd, r)) {
      throw VerificationError(r.id + ": multidegree " + to_string(r.multidegree) +
                              " is not properly balanced on its fiber");
    }
    if (r.entry(m.cols[j]) != RowEntry::minus_one) {
      throw VerificationError(r.id + " does not have -1 at " + m.cols[j]);
    }
    for (std::size_t c = j + 1; c < m.cols.size(); ++c) {
      if (r.entry(m.cols[c]) != RowEntry::zero) {
        throw VerificationError(r.id + " has a nonzero entry at " + m.cols[c] + " above the diagonal");
      }
    }
  }
  m.verdict = "independent";
  return m;
}

}  // namespace univjac
