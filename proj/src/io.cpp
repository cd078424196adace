#include "univjac/io.hpp"

#include <fstream>
#include <sstream>

#include "univjac/errors.hpp"

namespace univjac::io {

DualGraph graph_from_json(const json& j) {
  try {
    std::vector<Vertex> vs;
    for (const json& v : j.at("vertices")) vs.push_back({v.at("id").get<std::string>(), v.at("genus").get<int>()});
    std::vector<std::pair<std::string, std::string>> es;
    for (const json& e : j.value("edges", json::array())) {
      if (!e.is_array() || e.size() != 2) throw DomainError("each edge must be a pair of vertex ids");
      es.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return DualGraph(std::move(vs), es);
  } catch (const json::exception& ex) {
    throw DomainError(std::string("bad graph JSON: ") + ex.what());
  }
}

json to_json(const DualGraph& g) {
  json vs = json::array();
  for (const Vertex& v : g.vertices()) vs.push_back({{"id", v.id}, {"genus", v.genus}});
  json es = json::array();
  for (const auto& [a, b] : g.edge_ids()) es.push_back({a, b});
  return {{"vertices", vs}, {"edges", es}};
}

AnyPicElement element_from_json(const GenusDegree& gd, const json& j) {
  try {
    const Space s = parse_space(j.at("space").get<std::string>());
    std::map<std::string, std::int64_t> coeffs;
    const json given = j.value("coeffs", json::object());
    if (!given.is_object()) throw DomainError("coeffs must be an object");
    for (const auto& [label, c] : given.items()) {
      coeffs[label] = c.get<std::int64_t>();
    }
    return make_element(gd, s, coeffs);
  } catch (const json::exception& ex) {
    throw DomainError(std::string("bad class JSON: ") + ex.what());
  }
}

json to_json(const AnyPicElement& x) {
  return std::visit([](const auto& e) { return to_json(e); }, x);
}

json to_json(const Rational& q) {
  if (is_integer(q)) return q.numerator();
  return to_string(q);
}

json to_json(const Invariants& inv) {
  return {{"twog2", inv.twog2}, {"G1", inv.G1}, {"k", inv.k}, {"e", inv.e}, {"gerbe_order", inv.gerbe_order}};
}

json to_json(const Multidegree& md) { return md.degrees; }

json to_json(const BoundaryTable& t) {
  json entries = json::array();
  for (const BoundaryEntry& e : t.entries) {
    entries.push_back({{"label", e.label.name()},
                       {"i", e.label.i},
                       {"vine_type", {e.genus1, e.genus2}},
                       {"split", e.label.kind == BoundaryKind::split_first ||
                                     e.label.kind == BoundaryKind::split_second},
                       {"multidegree", to_json(e.multidegree)},
                       {"coefficient", e.coefficient}});
  }
  return {{"g", t.g}, {"d", t.d}, {"count", t.entries.size()}, {"divisors", entries}};
}

json to_json(const KappaClass& c) {
  return {{"kappa10", to_json(c.kappa10)}, {"kappa01", to_json(c.kappa01)},
          {"kappa_12", to_json(c.kappa_12)}, {"delta", to_json(c.delta)}};
}

json to_json(const Presentation& p) {
  return {{"space", std::string(to_string(p.space))},
          {"basis", p.basis},
          {"rank", p.rank},
          {"boundary_count", p.boundary_count},
          {"ranks", {{"jac", p.rank_jac}, {"j", p.rank_j}, {"barjac", p.rank_barjac}, {"barj", p.rank_barj}}},
          {"res_image_generator", p.res_image_generator}};
}

json to_json(const TopoClass& t) {
  return {{"lambda", to_json(t.lambda)}, {"zeta", to_json(t.zeta)}, {"kappa_12", to_json(t.kappa_12)},
          {"integral", t.integral()}};
}

json to_json(const ThetaRelation& t) {
  return {{"k", t.k},
          {"e", t.e},
          {"exponent", t.exponent},
          {"combination",
           {{"etaeta", to_json(t.combination.etaeta)}, {"etaL", to_json(t.combination.etaL)},
            {"LL", to_json(t.combination.LL)}}},
          {"verified", t.verified}};
}

namespace {

json entry_json(RowEntry e) {
  switch (e) {
    case RowEntry::minus_one: return -1;
    case RowEntry::zero: return 0;
    case RowEntry::unknown: return "?";
  }
  return nullptr;
}

}  // namespace

json to_json(const FamilyReport& r) {
  json row = json::object();
  for (const auto& [label, e] : r.row) row[label] = entry_json(e);
  json out{{"family", r.id},
           {"applicability", r.applicability},
           {"fiber", to_json(r.fiber)},
           {"multidegree", to_json(r.multidegree)},
           {"entries", row}};
  if (r.h) out["h"] = r.h;
  if (r.variant) out["variant"] = r.variant;
  if (r.shared) out["shared"] = true;
  return out;
}

json to_json(const IndependenceMatrix& m) {
  json rows = json::array();
  for (const FamilyReport& r : m.rows) {
    json entries = json::object();
    for (const auto& [label, e] : r.row) entries[label] = entry_json(e);
    rows.push_back({{"family", r.id}, {"entries", entries}});
  }
  return {{"g", m.g}, {"d", m.d}, {"cols", m.cols}, {"rows", rows}, {"verdict", m.verdict}};
}

json to_json(const CompareReport& r) {
  json cols = json::array();
  for (const AlphaColumn& c : r.columns) {
    cols.push_back({{"i", c.i}, {"targets", c.targets}, {"coefficient", c.coefficient}, {"cokernel", c.cokernel}});
  }
  return {{"rank_cl_barj", r.rank_cl_barj},
          {"rank_cl_j", r.rank_cl_j},
          {"rank_pic_barj", r.rank_pic_barj},
          {"rank_pic_j", r.rank_pic_j},
          {"boundary_count", r.boundary_count},
          {"alpha", cols},
          {"alpha_matrix", r.alpha_matrix},
          {"elementary_divisors", r.elementary_divisors},
          {"cokernel", {{"free_rank", r.cokernel_free_rank}, {"torsion", r.cokernel_torsion}}},
          {"alpha_matches_pullback", r.alpha_matches_pullback}};
}

json to_json(const PicJ0& p) {
  json torsion = json::array();
  for (const auto& [gen, order] : p.torsion) torsion.push_back({{"generator", gen}, {"order", order}});
  return {{"free", p.free}, {"torsion", torsion}, {"summary", to_string(p)}};
}

json parse_json_argument(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (!j.is_discarded()) return j;
  std::ifstream in(text);
  if (!in) throw DomainError("'" + text + "' is neither JSON nor a readable file");
  std::stringstream ss;
  ss << in.rdbuf();
  j = json::parse(ss.str(), nullptr, false);
  if (j.is_discarded()) throw DomainError("file '" + text + "' does not contain valid JSON");
  return j;
}

}  // namespace univjac::io
