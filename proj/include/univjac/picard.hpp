#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "univjac/arith.hpp"
#include "univjac/balanced.hpp"
#include "univjac/checked.hpp"
#include "univjac/dual_graph.hpp"
#include "univjac/errors.hpp"
#include "univjac/rational.hpp"

namespace univjac {

// ---------------------------------------------------------------- boundary

enum class BoundaryKind {
  irreducible,   // i = 0
  unsplit,       // k does not divide 2i-1, or i = g/2 with k not dividing g-1
  split_first,   // k | 2i-1, i < g/2
  split_second,
  half_genus,    // g even, i = g/2, k | g-1; counted twice in the total boundary
};

struct BoundaryLabel {
  int i = 0;
  BoundaryKind kind = BoundaryKind::irreducible;

  /// "d0", "d{i}", "d{i}_1", "d{i}_2" or "dg2".
  std::string name() const;

  friend auto operator<=>(const BoundaryLabel&, const BoundaryLabel&) = default;
};

struct BoundaryEntry {
  BoundaryLabel label;
  int genus1 = 0;       // vine type (i, g-i); for d0 the self-node curve
  int genus2 = 0;
  DualGraph fiber;      // 1-edge vine, or one vertex of genus g-1 with a loop
  Multidegree multidegree;
  int coefficient = 1;  // multiplicity inside the total boundary
};

struct BoundaryTable {
  std::int64_t g = 0;
  std::int64_t d = 0;
  std::vector<BoundaryEntry> entries;  // ordered by i, split pairs adjacent

  std::vector<std::string> labels() const;
  const BoundaryEntry& at(std::string_view label) const;
  bool contains(std::string_view label) const;
};

BoundaryTable boundary_table(const GenusDegree& gd);

/// Number of boundary labels.
std::size_t boundary_count(const GenusDegree& gd);

/// Whether the i-th boundary divisor splits (k | 2i-1 with i >= 1).
bool splits(const GenusDegree& gd, int i);

// ---------------------------------------------------------------- elements

enum class Space { jac, j, barjac, barj };

std::string_view to_string(Space s);
Space parse_space(std::string_view s);

/// Ordered free basis: {L10, L01, L11} or {L10, Xi}, followed by the
/// boundary labels for the compactified spaces.
std::vector<std::string> basis(const GenusDegree& gd, Space s);

/// Integer combination of basis labels, written additively. Each space is a
/// separate type; mixing (g,d) values is rejected at runtime.
template <Space S>
class PicElement {
 public:
  static constexpr Space space = S;

  explicit PicElement(const GenusDegree& gd) : gd_(gd) {}

  PicElement(const GenusDegree& gd, const std::map<std::string, std::int64_t>& coeffs) : gd_(gd) {
    const auto b = basis(gd, S);
    for (const auto& [label, c] : coeffs) {
      if (std::find(b.begin(), b.end(), label) == b.end()) {
        throw DomainError("label '" + label + "' is not in the " + std::string(to_string(S)) +
                          " basis at g=" + std::to_string(gd.genus()) +
                          ", d=" + std::to_string(gd.degree()));
      }
      if (c != 0) coeffs_[label] = c;
    }
  }

  static PicElement unit(const GenusDegree& gd, const std::string& label) {
    return PicElement(gd, {{label, 1}});
  }

  const GenusDegree& gd() const { return gd_; }
  const std::map<std::string, std::int64_t, std::less<>>& coeffs() const { return coeffs_; }

  std::int64_t operator[](std::string_view label) const {
    const auto it = coeffs_.find(label);
    return it == coeffs_.end() ? 0 : it->second;
  }

  bool is_zero() const { return coeffs_.empty(); }

  PicElement& operator+=(const PicElement& o) {
    same_gd(o);
    for (const auto& [label, c] : o.coeffs_) set(label, checked_add((*this)[label], c));
    return *this;
  }
  PicElement& operator-=(const PicElement& o) { return *this += o * -1; }

  friend PicElement operator+(PicElement a, const PicElement& b) { return a += b; }
  friend PicElement operator-(PicElement a, const PicElement& b) { return a -= b; }
  friend PicElement operator*(PicElement a, std::int64_t s) {
    for (auto& [label, c] : a.coeffs_) c = checked_mul(c, s);
    if (s == 0) a.coeffs_.clear();
    return a;
  }
  friend PicElement operator*(std::int64_t s, const PicElement& a) { return a * s; }

  friend bool operator==(const PicElement& a, const PicElement& b) {
    return a.gd_ == b.gd_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void same_gd(const PicElement& o) const {
    if (!(gd_ == o.gd_)) throw DomainError("elements belong to different (g,d)");
  }
  void set(const std::string& label, std::int64_t c) {
    if (c == 0) coeffs_.erase(label); else coeffs_[label] = c;
  }

  GenusDegree gd_;
  std::map<std::string, std::int64_t, std::less<>> coeffs_;
};

using JacElement = PicElement<Space::jac>;
using JElement = PicElement<Space::j>;
using BarJacElement = PicElement<Space::barjac>;
using BarJElement = PicElement<Space::barj>;
using AnyPicElement = std::variant<JacElement, JElement, BarJacElement, BarJElement>;

/// Multiplicative rendering in basis order, e.g. "L10^12 * L01^-1 * d0^-1";
/// the zero element is "1".
template <Space S>
std::string to_string(const PicElement<S>& x) {
  std::string out;
  for (const std::string& label : basis(x.gd(), S)) {
    const std::int64_t c = x[label];
    if (c == 0) continue;
    if (!out.empty()) out += " * ";
    out += label;
    if (c != 1) out += "^" + std::to_string(c);
  }
  return out.empty() ? "1" : out;
}

AnyPicElement make_element(const GenusDegree& gd, Space s,
                           const std::map<std::string, std::int64_t>& coeffs);
Space space_of(const AnyPicElement& x);

// ---------------------------------------------------------------- boundary classes

/// Pullback of the i-th boundary divisor of the moduli of stable curves.
BarJacElement pullback_boundary(const GenusDegree& gd, int i);

/// Sum of pullback_boundary over i = 0..floor(g/2).
BarJacElement total_boundary(const GenusDegree& gd);

// ---------------------------------------------------------------- tautological classes

struct KappaClass {
  Rational kappa10, kappa01, kappa_12, delta;
  friend bool operator==(const KappaClass&, const KappaClass&) = default;
};

/// First Chern class of the degree-one GRR expression for Lambda(n,m).
KappaClass grr_degree_one(std::int64_t n, std::int64_t m);

/// Rational combination of the Lambda generators and the total boundary.
struct LambdaCombination {
  Rational L10, L01, L11, delta;
  friend bool operator==(const LambdaCombination&, const LambdaCombination&) = default;
};

/// Replace the kappa classes by their expressions in Lambda(1,0), Lambda(0,1),
/// Lambda(1,1) and the total boundary.
LambdaCombination substitute_kappa(const KappaClass& c);

inline constexpr std::int64_t kMaxLambdaIndex = 100000;

BarJacElement reduce_lambda(const GenusDegree& gd, std::int64_t n, std::int64_t m);

/// Drop the boundary part.
JacElement restrict_to_jac(const BarJacElement& x);
JElement restrict_to_j(const BarJElement& x);

enum class KClass { K10, K01, K_12 };
KClass parse_kclass(std::string_view s);
BarJacElement reduce_K(const GenusDegree& gd, KClass which);

// ---------------------------------------------------------------- weights and the rigidification

std::int64_t res_weight(const JacElement& x);
std::int64_t res_weight(const BarJacElement& x);
/// Identically zero on the rigidified spaces.
std::int64_t res_weight(const JElement& x);
std::int64_t res_weight(const BarJElement& x);

/// Xi in the L01/L11 basis.
JacElement xi_element(const GenusDegree& gd);

/// Inclusion of Pic(J) into Pic(Jac): L10 -> L10, Xi -> xi_element.
JacElement include_j(const JElement& x);

struct JCoordinates {
  std::int64_t a;  // L10
  std::int64_t t;  // Xi
  friend bool operator==(const JCoordinates&, const JCoordinates&) = default;
};

/// x = a L10 + t Xi, present iff res_weight(x) = 0.
std::optional<JCoordinates> membership_J(const JacElement& x);
std::optional<JElement> to_j(const JacElement& x);

std::int64_t chi_d(const JElement& x);

struct Presentation {
  Space space;
  std::vector<std::string> basis;
  std::size_t rank;
  std::size_t boundary_count;
  std::size_t rank_jac, rank_j, rank_barjac, rank_barj;
  std::int64_t res_image_generator;  // gcd of res over Pic(Jac)
};

Presentation presentation(const GenusDegree& gd, Space s);

// ---------------------------------------------------------------- cohomology classes

struct TopoClass {
  Rational lambda, zeta, kappa_12;
  bool integral() const { return is_integer(lambda) && is_integer(zeta) && is_integer(kappa_12); }
  friend bool operator==(const TopoClass&, const TopoClass&) = default;
};

struct EtaDecomposition {
  std::int64_t lambda;
  std::int64_t eta;
  friend bool operator==(const EtaDecomposition&, const EtaDecomposition&) = default;
};

TopoClass topo_class(const JacElement& x);

/// eta in the (lambda, zeta, kappa_12) coordinates.
TopoClass eta_class(const GenusDegree& gd);

/// Present iff res_weight(x) = 0.
std::optional<EtaDecomposition> eta_decomposition(const JacElement& x);

// ---------------------------------------------------------------- theta relation

struct PairingClass {
  Rational etaeta, etaL, LL;
  friend bool operator==(const PairingClass&, const PairingClass&) = default;
};

/// Degree-one GRR class of d_pi(eta^n (x) L^m) for an eta of order k.
PairingClass spin_grr(std::int64_t k, std::int64_t n, std::int64_t m);

struct ThetaRelation {
  std::int64_t k;
  std::int64_t e;
  std::int64_t exponent;  // -k(k+e)e/2
  PairingClass combination;
  bool verified;
};

ThetaRelation theta_relation(const GenusDegree& gd);

}  // namespace univjac
