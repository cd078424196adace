#pragma once

#include <string>

#include <json.hpp>

#include "univjac/arith.hpp"
#include "univjac/balanced.hpp"
#include "univjac/compare.hpp"
#include "univjac/dual_graph.hpp"
#include "univjac/families.hpp"
#include "univjac/picard.hpp"

namespace univjac::io {

using json = nlohmann::ordered_json;

/// `{"vertices":[{"id":"C","genus":2}],"edges":[["C","R1"]]}`. Malformed
/// input raises DomainError.
DualGraph graph_from_json(const json& j);
json to_json(const DualGraph& g);

/// `{"space":"barjac","coeffs":{"L10":12,"d0":-1}}`; absent keys are 0.
AnyPicElement element_from_json(const GenusDegree& gd, const json& j);

template <Space S>
json to_json(const PicElement<S>& x) {
  json coeffs = json::object();
  for (const std::string& label : basis(x.gd(), S)) {
    if (x[label] != 0) coeffs[label] = x[label];
  }
  return {{"space", std::string(to_string(S))}, {"coeffs", coeffs}};
}
json to_json(const AnyPicElement& x);

json to_json(const Rational& q);
json to_json(const Invariants& inv);
json to_json(const Multidegree& md);
json to_json(const BoundaryTable& t);
json to_json(const KappaClass& c);
json to_json(const Presentation& p);
json to_json(const TopoClass& t);
json to_json(const ThetaRelation& t);
json to_json(const FamilyReport& r);
json to_json(const IndependenceMatrix& m);
json to_json(const CompareReport& r);
json to_json(const PicJ0& p);

/// Parse inline JSON, or read it from a file when the text is not JSON.
json parse_json_argument(const std::string& text);

}  // namespace univjac::io
