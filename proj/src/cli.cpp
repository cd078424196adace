#include "univjac/cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "univjac/acceptance.hpp"
#include "univjac/errors.hpp"
#include "univjac/io.hpp"
#include "univjac/sweep.hpp"

namespace univjac::cli {

namespace {

using io::json;

struct GD {
  std::int64_t g = 0;
  std::int64_t d = 0;
  GenusDegree make() const { return {g, d}; }
};

void add_gd(CLI::App* app, GD& gd) {
  app->add_option("-g,--genus", gd.g, "genus (>= 3)")->required();
  app->add_option("-d,--degree", gd.d, "degree")->required()->allow_extra_args(false);
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

DualGraph read_graph(const std::string& path) { return io::graph_from_json(io::parse_json_argument(path)); }

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

void print_graph(std::ostream& out, const DualGraph& g) {
  out << "vertices:";
  for (const Vertex& v : g.vertices()) out << ' ' << v.id << "(g=" << v.genus << ')';
  out << "\nedges:";
  for (const auto& [a, b] : g.edge_ids()) out << ' ' << a << '-' << b;
  out << "\ntotal genus: " << g.total_genus() << '\n';
}

std::string rat(const Rational& q) { return to_string(q); }

// Every subcommand registers its options and a handler returning an exit code.
struct Command {
  CLI::App* app;
  std::function<int()> handler;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Picard groups of universal Jacobians: exact computations", "univjac"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "show help for every subcommand");

  std::vector<Command> cmds;
  bool as_json = false;
  GD gd;
  std::string graph_path, mode = "connected", class_text, space = "barjac", kname, format = "pretty", output;
  std::int64_t n = 0, m = 0, deg = 0;
  bool strict = false, verify_flag = false;
  std::vector<int> vine_type;
  std::vector<std::string> grid_terms, commands{"invariants", "independence"};
  std::uint64_t seed = kAcceptanceSeed;

  auto json_flag = [&](CLI::App* a) { a->add_flag("--json", as_json, "emit JSON"); };

  // invariants
  {
    auto* a = app.add_subcommand("invariants", "k, e, gerbe order and gcds of (g,d)");
    add_gd(a, gd);
    json_flag(a);
    cmds.push_back({a, [&] {
      const Invariants inv = invariants(gd.make());
      if (as_json) return print_json(out, io::to_json(inv)), kOk;
      out << "twog2=" << inv.twog2 << "\nG1=" << inv.G1 << "\nk=" << inv.k << "\ne=" << inv.e
          << "\ngerbe_order=" << inv.gerbe_order << '\n';
      return kOk;
    }});
  }
  // classify
  {
    auto* a = app.add_subcommand("classify", "stability type of a dual graph");
    a->add_option("--graph", graph_path, "graph JSON file or inline JSON")->required();
    json_flag(a);
    cmds.push_back({a, [&] {
      const std::string s(to_string(classify(read_graph(graph_path))));
      if (as_json) return print_json(out, {{"classification", s}}), kOk;
      out << s << '\n';
      return kOk;
    }});
  }
  // stabilize
  {
    auto* a = app.add_subcommand("stabilize", "contract exceptional components");
    a->add_option("--graph", graph_path, "graph JSON file or inline JSON")->required();
    json_flag(a);
    cmds.push_back({a, [&] {
      const DualGraph s = stabilize(read_graph(graph_path));
      if (as_json) return print_json(out, io::to_json(s)), kOk;
      print_graph(out, s);
      return kOk;
    }});
  }
  // balanced
  {
    auto* a = app.add_subcommand("balanced", "enumerate balanced multidegrees on a graph");
    a->add_option("--graph", graph_path, "graph JSON file or inline JSON")->required();
    a->add_option("-d,--degree", deg, "total degree")->required();
    a->add_flag("--strict", strict, "strictly balanced only");
    a->add_option("--mode", mode, "subcurves to test")->check(CLI::IsMember({"all", "connected"}));
    json_flag(a);
    cmds.push_back({a, [&] {
      const auto list = enumerate_balanced(read_graph(graph_path), deg, strict,
                                           mode == "all" ? SubcurveMode::all : SubcurveMode::connected_both_sides);
      if (as_json) {
        json arr = json::array();
        for (const auto& md : list) arr.push_back(md.degrees);
        return print_json(out, arr), kOk;
      }
      for (const auto& md : list) out << to_string(md) << '\n';
      return kOk;
    }});
  }
  // dspecial
  {
    auto* a = app.add_subcommand("dspecial", "d-special test for a vine type or a graph");
    auto* g_opt = a->add_option("--graph", graph_path, "graph JSON file or inline JSON");
    auto* v_opt = a->add_option("--vine", vine_type, "vine type: genus of one side and number of edges")->expected(2);
    g_opt->excludes(v_opt);
    add_gd(a, gd);
    json_flag(a);
    cmds.push_back({a, [&, g_opt, v_opt] {
      bool special = false;
      std::string method;
      if (*v_opt) {
        special = is_d_special_vine(gd.make(), vine_type[0], vine_type[1]);
        method = "vine";
      } else if (*g_opt) {
        const DualGraph graph = read_graph(graph_path);
        if (graph.total_genus() != gd.g) {
          throw DomainError("graph has genus " + std::to_string(graph.total_genus()) + ", not " + std::to_string(gd.g));
        }
        special = has_properly_not_strictly_balanced(graph, gd.d);
        method = "graph";
      } else {
        throw CLI::RequiredError("--graph or --vine");
      }
      if (as_json) return print_json(out, {{"d_special", special}, {"method", method}}), kOk;
      out << (special ? "true" : "false") << '\n';
      return kOk;
    }});
  }
  // boundary
  {
    auto* a = app.add_subcommand("boundary", "boundary divisors and their generic multidegrees");
    add_gd(a, gd);
    json_flag(a);
    cmds.push_back({a, [&] {
      const BoundaryTable t = boundary_table(gd.make());
      if (as_json) return print_json(out, io::to_json(t)), kOk;
      out << pad("label", 8) << pad("type", 10) << pad("multidegree", 14) << "coefficient\n";
      for (const BoundaryEntry& e : t.entries) {
        const std::string type = e.label.i == 0 ? "irr" : "(" + std::to_string(e.genus1) + "," + std::to_string(e.genus2) + ")";
        out << pad(e.label.name(), 8) << pad(type, 10) << pad(to_string(e.multidegree), 14) << e.coefficient << '\n';
      }
      out << t.entries.size() << " divisors\n";
      return kOk;
    }});
  }
  // reduce
  {
    auto* a = app.add_subcommand("reduce", "express Lambda(n,m) or a K class in the free basis");
    add_gd(a, gd);
    auto* n_opt = a->add_option("-n", n, "power of the dualizing sheaf");
    auto* m_opt = a->add_option("-m", m, "power of the universal line bundle");
    auto* k_opt = a->add_option("--K", kname, "K10, K01 or K_12 instead of Lambda(n,m)");
    k_opt->excludes(n_opt)->excludes(m_opt);
    json_flag(a);
    cmds.push_back({a, [&, k_opt] {
      const BarJacElement x = *k_opt ? reduce_K(gd.make(), parse_kclass(kname)) : reduce_lambda(gd.make(), n, m);
      const JacElement r = restrict_to_jac(x);
      if (as_json) return print_json(out, {{"barjac", io::to_json(x)}, {"jac", io::to_json(r)}}), kOk;
      out << "barjac: " << to_string(x) << "\njac:    " << to_string(r) << '\n';
      return kOk;
    }});
  }
  // xi
  {
    auto* a = app.add_subcommand("xi", "the generator Xi in the L01/L11 basis");
    add_gd(a, gd);
    json_flag(a);
    cmds.push_back({a, [&] {
      const JacElement xi = xi_element(gd.make());
      if (as_json) return print_json(out, io::to_json(xi)), kOk;
      out << "Xi = " << to_string(xi) << '\n';
      return kOk;
    }});
  }
  // res, chi, topo take a class
  auto class_cmd = [&](const char* name, const char* help, std::function<int(const AnyPicElement&)> body) {
    auto* a = app.add_subcommand(name, help);
    add_gd(a, gd);
    a->add_option("--class", class_text, "class as JSON (inline or file)")->required();
    json_flag(a);
    cmds.push_back({a, [&, body] { return body(io::element_from_json(gd.make(), io::parse_json_argument(class_text))); }});
  };
  class_cmd("res", "weight of a class", [&](const AnyPicElement& x) {
    const std::int64_t r = std::visit([](const auto& e) { return res_weight(e); }, x);
    if (as_json) return print_json(out, {{"res", r}}), kOk;
    out << r << '\n';
    return kOk;
  });
  class_cmd("chi", "multiple of the theta class on a fiber (space j)", [&](const AnyPicElement& x) {
    if (space_of(x) != Space::j) throw DomainError("chi is defined on the j basis {L10, Xi}");
    const std::int64_t c = chi_d(std::get<JElement>(x));
    if (as_json) return print_json(out, {{"chi", c}}), kOk;
    out << c << '\n';
    return kOk;
  });
  class_cmd("topo", "first Chern class in the lambda/zeta/kappa basis (space jac)", [&](const AnyPicElement& x) {
    if (space_of(x) != Space::jac) throw DomainError("topo is defined on the jac basis {L10, L01, L11}");
    const JacElement& e = std::get<JacElement>(x);
    const TopoClass t = topo_class(e);
    const auto eta = eta_decomposition(e);
    if (as_json) {
      json j{{"class", io::to_json(t)}};
      if (eta) j["eta_decomposition"] = {{"lambda", eta->lambda}, {"eta", eta->eta}};
      return print_json(out, j), kOk;
    }
    out << "lambda=" << rat(t.lambda) << " zeta=" << rat(t.zeta) << " kappa_12=" << rat(t.kappa_12) << '\n';
    if (eta) out << "eta decomposition: lambda=" << eta->lambda << " eta=" << eta->eta << '\n';
    return kOk;
  });
  // theta
  {
    auto* a = app.add_subcommand("theta", "relation between Xi and the theta divisor");
    add_gd(a, gd);
    json_flag(a);
    cmds.push_back({a, [&] {
      const ThetaRelation t = theta_relation(gd.make());
      if (as_json) return print_json(out, io::to_json(t)), t.verified ? kOk : kVerification;
      out << "k=" << t.k << "\ne=" << t.e << "\nexponent=" << t.exponent << "\ncombination=(" << rat(t.combination.etaeta)
          << ", " << rat(t.combination.etaL) << ", " << rat(t.combination.LL) << ")\nverified=" << (t.verified ? "yes" : "no")
          << '\n';
      return t.verified ? kOk : kVerification;
    }});
  }
  // presentation
  {
    auto* a = app.add_subcommand("presentation", "free basis and rank of one of the four Picard groups");
    add_gd(a, gd);
    a->add_option("--space", space, "jac, j, barjac or barj");
    json_flag(a);
    cmds.push_back({a, [&] {
      const Presentation p = presentation(gd.make(), parse_space(space));
      if (as_json) return print_json(out, io::to_json(p)), kOk;
      out << "space=" << to_string(p.space) << "\nrank=" << p.rank << "\nbasis=";
      for (std::size_t j = 0; j < p.basis.size(); ++j) out << (j ? "," : "") << p.basis[j];
      out << "\nboundary divisors=" << p.boundary_count << "\nranks jac/j/barjac/barj=" << p.rank_jac << '/' << p.rank_j
          << '/' << p.rank_barjac << '/' << p.rank_barj << "\nres image generator=" << p.res_image_generator << '\n';
      return kOk;
    }});
  }
  // families
  {
    auto* a = app.add_subcommand("families", "test families used for boundary independence");
    add_gd(a, gd);
    a->add_flag("--verify", verify_flag, "check every fiber multidegree is properly balanced");
    json_flag(a);
    cmds.push_back({a, [&] {
      const GenusDegree norm = normalized(gd.make());
      const auto reports = independence_families(norm);
      bool ok = true;
      json arr = json::array();
      for (const FamilyReport& r : reports) {
        const bool good = !verify_flag || verify_family(norm, r);
        ok = ok && good;
        json j = io::to_json(r);
        if (verify_flag) j["balanced"] = good;
        arr.push_back(j);
        if (as_json) continue;
        out << r.id << "  [" << r.applicability << "]" << (r.shared ? " shared" : "") << "\n  fiber:";
        for (const Vertex& v : r.fiber.vertices()) out << ' ' << v.id << "(g=" << v.genus << ')';
        out << "\n  multidegree: " << to_string(r.multidegree) << "\n  row:";
        for (const auto& [label, e] : r.row) out << ' ' << label << '=' << to_string(e);
        out << '\n';
        if (verify_flag) out << "  balanced: " << (good ? "yes" : "NO") << '\n';
      }
      if (as_json) print_json(out, arr);
      return ok ? kOk : kVerification;
    }});
  }
  // independence
  {
    auto* a = app.add_subcommand("independence", "intersection matrix of families against boundary divisors");
    add_gd(a, gd);
    json_flag(a);
    cmds.push_back({a, [&] {
      const IndependenceMatrix mat = independence_matrix(gd.make());
      if (as_json) return print_json(out, io::to_json(mat)), kOk;
      out << pad("", 10);
      for (const auto& c : mat.cols) out << pad(c, 6);
      out << '\n';
      for (const FamilyReport& r : mat.rows) {
        out << pad(r.id, 10);
        for (const auto& c : mat.cols) out << pad(std::string(to_string(r.entry(c))), 6);
        out << '\n';
      }
      out << "verdict: " << mat.verdict << '\n';
      return kOk;
    }});
  }
  // compare
  {
    auto* a = app.add_subcommand("compare", "the map alpha_d and class-group ranks");
    add_gd(a, gd);
    json_flag(a);
    cmds.push_back({a, [&] {
      const CompareReport r = compare_report(gd.make());
      if (as_json) return print_json(out, io::to_json(r)), r.alpha_matches_pullback ? kOk : kVerification;
      out << "rank Cl(barJ)=" << r.rank_cl_barj << "\nrank Pic(barJ)=" << r.rank_pic_barj << '\n';
      for (const AlphaColumn& c : r.columns) {
        out << "alpha(Delta_" << c.i << ") = ";
        for (std::size_t j = 0; j < c.targets.size(); ++j) {
          out << (j ? " + " : "") << (c.coefficient != 1 ? std::to_string(c.coefficient) + "*" : "") << c.targets[j];
        }
        out << "  cokernel " << c.cokernel << '\n';
      }
      out << "elementary divisors:";
      for (auto e : r.elementary_divisors) out << ' ' << e;
      out << "\ncokernel: Z^" << r.cokernel_free_rank;
      for (auto t : r.cokernel_torsion) out << " + Z/" << t;
      out << "\nalpha matches pullback: " << (r.alpha_matches_pullback ? "yes" : "no") << '\n';
      return r.alpha_matches_pullback ? kOk : kVerification;
    }});
  }
  // picj0
  {
    auto* a = app.add_subcommand("picj0", "Picard group of the moduli scheme over the open part");
    add_gd(a, gd);
    json_flag(a);
    cmds.push_back({a, [&] {
      const PicJ0 p = pic_J0(gd.make());
      if (as_json) return print_json(out, io::to_json(p)), kOk;
      out << to_string(p) << '\n';
      return kOk;
    }});
  }
  // verify
  {
    auto* a = app.add_subcommand("verify", "run the acceptance suite");
    a->add_option("--grid", grid_terms, "bounds such as g=3..8 d=0..max");
    a->add_option("--seed", seed, "seed for the random graphs");
    json_flag(a);
    cmds.push_back({a, [&] {
      GridSpec grid;
      for (const auto& t : grid_terms) parse_grid_term(t, grid);
      const auto results = run_acceptance(grid, seed);
      bool ok = true;
      json arr = json::array();
      for (const CriterionResult& r : results) {
        ok = ok && r.pass;
        arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        if (!as_json) out << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.name << " (" << r.detail << ")\n";
      }
      if (as_json) print_json(out, arr);
      return ok ? kOk : kVerification;
    }});
  }
  // sweep
  {
    auto* a = app.add_subcommand("sweep", "evaluate commands over a (g,d) grid");
    a->add_option("--grid", grid_terms, "bounds such as g=3..8 d=0..max");
    a->add_option("--commands", commands, "invariants, boundary, presentation, xi, theta, independence, compare, picj0")
        ->delimiter(',');
    a->add_option("--format", format, "json, tsv or pretty")->check(CLI::IsMember({"json", "tsv", "pretty"}));
    a->add_option("-o,--output", output, "write to a file instead of standard output");
    cmds.push_back({a, [&] {
      SweepSpec spec;
      for (const auto& t : grid_terms) parse_grid_term(t, spec.grid);
      spec.commands = commands;
      spec.format = parse_sweep_format(format);
      const auto points = run_sweep(spec, sweep_threads());
      if (output.empty()) {
        write_sweep(points, spec.format, out);
      } else {
        std::ofstream f(output);
        if (!f) throw DomainError("cannot write '" + output + "'");
        write_sweep(points, spec.format, f);
      }
      bool domain = false, verification = false;
      for (const auto& p : points) {
        domain = domain || p.domain_error;
        verification = verification || p.verification_error;
      }
      return verification ? kVerification : domain ? kDomain : kOk;
    }});
  }

  try {
    app.parse(argc, argv);
    for (const Command& c : cmds) {
      if (*c.app) return c.handler();
    }
    return kUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerification;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
}

}  // namespace univjac::cli
