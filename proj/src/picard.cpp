#include "univjac/picard.hpp"

#include <numeric>

namespace univjac {

// ---------------------------------------------------------------- boundary

std::string BoundaryLabel::name() const {
  switch (kind) {
    case BoundaryKind::irreducible: return "d0";
    case BoundaryKind::unsplit: return "d" + std::to_string(i);
    case BoundaryKind::split_first: return "d" + std::to_string(i) + "_1";
    case BoundaryKind::split_second: return "d" + std::to_string(i) + "_2";
    case BoundaryKind::half_genus: return "dg2";
  }
  return {};
}

std::vector<std::string> BoundaryTable::labels() const {
  std::vector<std::string> out;
  for (const auto& e : entries) out.push_back(e.label.name());
  return out;
}

bool BoundaryTable::contains(std::string_view label) const {
  return std::any_of(entries.begin(), entries.end(),
                     [&](const BoundaryEntry& e) { return e.label.name() == label; });
}

const BoundaryEntry& BoundaryTable::at(std::string_view label) const {
  for (const auto& e : entries) {
    if (e.label.name() == label) return e;
  }
  throw DomainError("no boundary label '" + std::string(label) + "'");
}

bool splits(const GenusDegree& gd, int i) {
  return i >= 1 && divides(k_dg(gd), 2 * i - 1);
}

namespace {

// Nearest integer to a value that is not a half-integer.
std::int64_t round_nearest(const Rational& x) {
  if (is_half_integer(x)) throw VerificationError("rounding tie at " + to_string(x));
  return floor(x + Rational(1, 2));
}

std::vector<BoundaryLabel> boundary_labels(const GenusDegree& gd) {
  const int g = static_cast<int>(gd.genus());
  std::vector<BoundaryLabel> out{{0, BoundaryKind::irreducible}};
  for (int i = 1; i <= g / 2; ++i) {
    if (!splits(gd, i)) {
      out.push_back({i, BoundaryKind::unsplit});
    } else if (2 * i < g) {
      out.push_back({i, BoundaryKind::split_first});
      out.push_back({i, BoundaryKind::split_second});
    } else {
      out.push_back({i, BoundaryKind::half_genus});
    }
  }
  return out;
}

}  // namespace

BoundaryTable boundary_table(const GenusDegree& gd) {
  const std::int64_t g = gd.genus();
  const std::int64_t d = gd.degree();
  BoundaryTable table{g, d, {}};
  for (const BoundaryLabel& label : boundary_labels(gd)) {
    const int i = label.i;
    if (label.kind == BoundaryKind::irreducible) {
      table.entries.push_back({label, static_cast<int>(g - 1), 0,
                               single_vertex(static_cast<int>(g - 1), 1), Multidegree{{d}}, 1});
      continue;
    }
    const Rational x(d * (2 * i - 1), 2 * g - 2);
    const Rational y(d * (2 * (g - i) - 1), 2 * g - 2);
    std::int64_t a = 0, b = 0;
    int coefficient = 1;
    switch (label.kind) {
      case BoundaryKind::unsplit:
        a = round_nearest(x);
        b = round_nearest(y);
        break;
      case BoundaryKind::split_first:
        a = floor(x);
        b = ceil(y);
        break;
      case BoundaryKind::split_second:
        a = ceil(x);
        b = floor(y);
        break;
      case BoundaryKind::half_genus:
        a = (d - 1) / 2;
        b = (d + 1) / 2;
        if (d % 2 == 0) throw VerificationError("half-genus divisor needs odd d");
        coefficient = 2;
        break;
      case BoundaryKind::irreducible:
        break;
    }
    if (label.kind == BoundaryKind::split_first || label.kind == BoundaryKind::split_second) {
      if (!is_half_integer(x)) throw VerificationError("split column without half-integral bound");
    }
    if (a + b != d) throw VerificationError("boundary multidegree does not sum to d");
    const int gi = static_cast<int>(g - i);
    table.entries.push_back({label, i, gi, vine(i, gi, 1), Multidegree{{a, b}}, coefficient});
  }
  return table;
}

std::size_t boundary_count(const GenusDegree& gd) { return boundary_labels(gd).size(); }

// ---------------------------------------------------------------- spaces

std::string_view to_string(Space s) {
  switch (s) {
    case Space::jac: return "jac";
    case Space::j: return "j";
    case Space::barjac: return "barjac";
    case Space::barj: return "barj";
  }
  return {};
}

Space parse_space(std::string_view s) {
  if (s == "jac") return Space::jac;
  if (s == "j") return Space::j;
  if (s == "barjac") return Space::barjac;
  if (s == "barj") return Space::barj;
  throw DomainError("unknown space '" + std::string(s) + "' (expected jac, j, barjac or barj)");
}

std::vector<std::string> basis(const GenusDegree& gd, Space s) {
  std::vector<std::string> out;
  if (s == Space::jac || s == Space::barjac) {
    out = {"L10", "L01", "L11"};
  } else {
    out = {"L10", "Xi"};
  }
  if (s == Space::barjac || s == Space::barj) {
    for (const BoundaryLabel& l : boundary_labels(gd)) out.push_back(l.name());
  }
  return out;
}

AnyPicElement make_element(const GenusDegree& gd, Space s,
                           const std::map<std::string, std::int64_t>& coeffs) {
  switch (s) {
    case Space::jac: return JacElement(gd, coeffs);
    case Space::j: return JElement(gd, coeffs);
    case Space::barjac: return BarJacElement(gd, coeffs);
    case Space::barj: return BarJElement(gd, coeffs);
  }
  throw DomainError("unknown space");
}

Space space_of(const AnyPicElement& x) {
  return std::visit([](const auto& e) { return std::decay_t<decltype(e)>::space; }, x);
}

// ---------------------------------------------------------------- boundary classes

BarJacElement pullback_boundary(const GenusDegree& gd, int i) {
  const int top = static_cast<int>(gd.genus() / 2);
  if (i < 0 || i > top) {
    throw RangeError("boundary index " + std::to_string(i) + " outside [0, " +
                     std::to_string(top) + "]");
  }
  BarJacElement out(gd);
  for (const BoundaryLabel& l : boundary_labels(gd)) {
    if (l.i != i) continue;
    out += BarJacElement::unit(gd, l.name()) * (l.kind == BoundaryKind::half_genus ? 2 : 1);
  }
  return out;
}

BarJacElement total_boundary(const GenusDegree& gd) {
  BarJacElement out(gd);
  for (int i = 0; i <= gd.genus() / 2; ++i) out += pullback_boundary(gd, i);
  return out;
}

// ---------------------------------------------------------------- tautological classes

KappaClass grr_degree_one(std::int64_t n, std::int64_t m) {
  return {Rational(6 * n * n - 6 * n + 1, 12), Rational(2 * n * m - m, 2), Rational(m * m, 2),
          Rational(1, 12)};
}

LambdaCombination substitute_kappa(const KappaClass& c) {
  // kappa10 = 12 L10 - delta, kappa01 = L11 - L01, kappa_12 = L01 + L11 - 2 L10
  return {12 * c.kappa10 - 2 * c.kappa_12, -c.kappa01 + c.kappa_12, c.kappa01 + c.kappa_12,
          c.delta - c.kappa10};
}

namespace {

void require_lambda_index(std::int64_t v, const char* name) {
  if (v < -kMaxLambdaIndex || v > kMaxLambdaIndex) {
    throw DomainError(std::string(name) + " must lie in [-" + std::to_string(kMaxLambdaIndex) +
                      ", " + std::to_string(kMaxLambdaIndex) + "]");
  }
}

}  // namespace

BarJacElement reduce_lambda(const GenusDegree& gd, std::int64_t n, std::int64_t m) {
  require_lambda_index(n, "n");
  require_lambda_index(m, "m");
  BarJacElement out(gd, {{"L10", 6 * n * n - 6 * n - m * m + 1},
                         {"L01", -m * n + choose2(m + 1)},
                         {"L11", m * n + choose2(m)}});
  out -= total_boundary(gd) * choose2(n);
  return out;
}

JacElement restrict_to_jac(const BarJacElement& x) {
  return JacElement(x.gd(), {{"L10", x["L10"]}, {"L01", x["L01"]}, {"L11", x["L11"]}});
}

JElement restrict_to_j(const BarJElement& x) {
  return JElement(x.gd(), {{"L10", x["L10"]}, {"Xi", x["Xi"]}});
}

KClass parse_kclass(std::string_view s) {
  if (s == "K10") return KClass::K10;
  if (s == "K01") return KClass::K01;
  if (s == "K_12" || s == "K-12") return KClass::K_12;
  throw DomainError("unknown class '" + std::string(s) + "' (expected K10, K01 or K_12)");
}

BarJacElement reduce_K(const GenusDegree& gd, KClass which) {
  switch (which) {
    case KClass::K10: return BarJacElement(gd, {{"L10", 12}}) - total_boundary(gd);
    case KClass::K01: return BarJacElement(gd, {{"L11", 1}, {"L01", -1}});
    case KClass::K_12: return BarJacElement(gd, {{"L01", 1}, {"L11", 1}, {"L10", -2}});
  }
  throw DomainError("unknown class");
}

// ---------------------------------------------------------------- weights

namespace {

template <typename E>
std::int64_t weight(const E& x) {
  const std::int64_t g = x.gd().genus();
  const std::int64_t d = x.gd().degree();
  return checked_add(checked_mul(d - g + 1, x["L01"]), checked_mul(d + g - 1, x["L11"]));
}

// G = gcd(d+g-1, d-g+1); positive since 2g-2 > 0.
std::int64_t xi_gcd(const GenusDegree& gd) {
  return std::gcd(gd.degree() + gd.genus() - 1, gd.degree() - gd.genus() + 1);
}

}  // namespace

std::int64_t res_weight(const JacElement& x) { return weight(x); }
std::int64_t res_weight(const BarJacElement& x) { return weight(x); }
std::int64_t res_weight(const JElement&) { return 0; }
std::int64_t res_weight(const BarJElement&) { return 0; }

JacElement xi_element(const GenusDegree& gd) {
  const std::int64_t G = xi_gcd(gd);
  return JacElement(gd, {{"L01", (gd.degree() + gd.genus() - 1) / G},
                         {"L11", -(gd.degree() - gd.genus() + 1) / G}});
}

JacElement include_j(const JElement& x) {
  return JacElement(x.gd(), {{"L10", x["L10"]}}) + xi_element(x.gd()) * x["Xi"];
}

std::optional<JCoordinates> membership_J(const JacElement& x) {
  if (res_weight(x) != 0) return std::nullopt;
  const GenusDegree& gd = x.gd();
  const std::int64_t G = xi_gcd(gd);
  const std::int64_t p = (gd.degree() + gd.genus() - 1) / G;
  const std::int64_t q = (gd.degree() - gd.genus() + 1) / G;
  // res = 0 forces (c01, c11) to be a multiple of (p, -q) with p, q coprime.
  const std::int64_t t = p != 0 ? x["L01"] / p : -x["L11"] / q;
  const JCoordinates out{x["L10"], t};
  if (!(include_j(JElement(gd, {{"L10", out.a}, {"Xi", out.t}})) == x)) {
    throw VerificationError("weight-zero element is not a combination of L10 and Xi");
  }
  return out;
}

std::optional<JElement> to_j(const JacElement& x) {
  const auto c = membership_J(x);
  if (!c) return std::nullopt;
  return JElement(x.gd(), {{"L10", c->a}, {"Xi", c->t}});
}

std::int64_t chi_d(const JElement& x) { return checked_mul(k_dg(x.gd()), x["Xi"]); }

Presentation presentation(const GenusDegree& gd, Space s) {
  const std::size_t b = boundary_count(gd);
  const auto bs = basis(gd, s);
  const std::int64_t g = gd.genus(), d = gd.degree();
  return {s, bs, bs.size(), b, 3, 2, 3 + b, 2 + b, std::gcd(d - g + 1, d + g - 1)};
}

// ---------------------------------------------------------------- cohomology classes

TopoClass topo_class(const JacElement& x) {
  const Rational l10(x["L10"]), l01(x["L01"]), l11(x["L11"]);
  // L10 -> lambda, L11 -> -zeta, L01 -> zeta + kappa_12 + lambda
  return {l10 + l01, l01 - l11, l01};
}

TopoClass eta_class(const GenusDegree& gd) {
  const std::int64_t g = gd.genus(), d = gd.degree();
  const std::int64_t g1 = std::gcd(2 * g - 2, d + g - 1);
  // (d kappa01 + (g-1) kappa_12)/G1 with kappa01 = 2 zeta + kappa_12
  return {Rational(0), Rational(2 * d, g1), Rational(d + g - 1, g1)};
}

std::optional<EtaDecomposition> eta_decomposition(const JacElement& x) {
  const auto c = membership_J(x);
  if (!c) return std::nullopt;
  const GenusDegree& gd = x.gd();
  const std::int64_t p = (gd.degree() + gd.genus() - 1) / xi_gcd(gd);
  const EtaDecomposition out{checked_add(c->a, checked_mul(c->t, p)), c->t};

  const TopoClass eta = eta_class(gd);
  const TopoClass direct = topo_class(x);
  const TopoClass via_eta{Rational(out.lambda) + out.eta * eta.lambda, out.eta * eta.zeta,
                          out.eta * eta.kappa_12};
  if (!(direct == via_eta)) throw VerificationError("eta decomposition disagrees with topo_class");
  return out;
}

// ---------------------------------------------------------------- theta relation

PairingClass spin_grr(std::int64_t k, std::int64_t n, std::int64_t m) {
  return {Rational(6 * n * n - 6 * k * n + k * k, 12), Rational(2 * m * n - k * m, 2),
          Rational(m * m, 2)};
}

ThetaRelation theta_relation(const GenusDegree& gd) {
  const std::int64_t k = k_dg(gd);
  const std::int64_t e = e_dg(gd);
  const PairingClass a = spin_grr(k, 0, 1);
  const PairingClass b = spin_grr(k, k, 1);
  const PairingClass c = spin_grr(k, -e, 1);
  const Rational kr(k), er(e);
  const PairingClass combo{(kr + er) * a.etaeta - er * b.etaeta - kr * c.etaeta,
                           (kr + er) * a.etaL - er * b.etaL - kr * c.etaL,
                           (kr + er) * a.LL - er * b.LL - kr * c.LL};
  const std::int64_t twice = -k * (k + e) * e;
  const bool integral = twice % 2 == 0;
  const std::int64_t exponent = twice / 2;
  const bool verified = integral && combo == PairingClass{Rational(exponent), 0, 0};
  return {k, e, exponent, combo, verified};
}

}  // namespace univjac
