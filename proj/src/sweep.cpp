#include "univjac/sweep.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "univjac/errors.hpp"
#include "univjac/io.hpp"

namespace univjac {

SweepFormat parse_sweep_format(const std::string& s) {
  if (s == "json") return SweepFormat::json;
  if (s == "tsv") return SweepFormat::tsv;
  if (s == "pretty") return SweepFormat::pretty;
  throw DomainError("unknown format '" + s + "' (expected json, tsv or pretty)");
}

int sweep_threads() {
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  if (const char* env = std::getenv("UNIVJAC_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0 && cap < threads) threads = cap;
  }
  return threads;
}

namespace {

nlohmann::ordered_json evaluate(const std::string& cmd, const GenusDegree& gd) {
  if (cmd == "invariants") return io::to_json(invariants(gd));
  if (cmd == "boundary") return io::to_json(boundary_table(gd));
  if (cmd == "presentation") return io::to_json(presentation(gd, Space::barjac));
  if (cmd == "xi") return io::to_json(xi_element(gd));
  if (cmd == "theta") return io::to_json(theta_relation(gd));
  if (cmd == "independence") return io::to_json(independence_matrix(gd));
  if (cmd == "compare") return io::to_json(compare_report(gd));
  if (cmd == "picj0") return io::to_json(pic_J0(gd));
  throw DomainError("command '" + cmd + "' cannot be swept");
}

SweepPoint evaluate_point(const SweepSpec& spec, std::int64_t g, std::int64_t d) {
  SweepPoint p{g, d, nlohmann::ordered_json::object()};
  for (const std::string& cmd : spec.commands) {
    try {
      p.results[cmd] = evaluate(cmd, GenusDegree(g, d));
    } catch (const VerificationError& e) {
      p.results[cmd] = {{"error", e.what()}, {"kind", "verification"}};
      p.verification_error = true;
    } catch (const std::exception& e) {
      p.results[cmd] = {{"error", e.what()}, {"kind", "domain"}};
      p.domain_error = true;
    }
  }
  return p;
}

std::vector<std::pair<std::int64_t, std::int64_t>> grid_points(const GridSpec& grid) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pts;
  for (std::int64_t g = grid.g_min; g <= grid.g_max; ++g) {
    for (std::int64_t d = grid.d_lo(g); d <= grid.d_hi(g); ++d) pts.emplace_back(g, d);
  }
  return pts;
}

}  // namespace

std::vector<SweepPoint> run_sweep(const SweepSpec& spec, int threads) {
  const auto pts = grid_points(spec.grid);
  std::vector<SweepPoint> out(pts.size());
  const std::int64_t n = static_cast<std::int64_t>(pts.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t j = 0; j < n; ++j) out[j] = evaluate_point(spec, pts[j].first, pts[j].second);
  return out;
}

std::vector<SweepPoint> run_sweep_serial(const SweepSpec& spec) {
  std::vector<SweepPoint> out;
  for (const auto& [g, d] : grid_points(spec.grid)) out.push_back(evaluate_point(spec, g, d));
  return out;
}

void write_sweep(const std::vector<SweepPoint>& points, SweepFormat format, std::ostream& out) {
  switch (format) {
    case SweepFormat::json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const SweepPoint& p : points) arr.push_back({{"g", p.g}, {"d", p.d}, {"results", p.results}});
      out << arr.dump(2) << '\n';
      break;
    }
    case SweepFormat::tsv:
      out << "g\td\tcommand\tresult\n";
      for (const SweepPoint& p : points) {
        for (const auto& [cmd, r] : p.results.items()) out << p.g << '\t' << p.d << '\t' << cmd << '\t' << r.dump() << '\n';
      }
      break;
    case SweepFormat::pretty:
      for (const SweepPoint& p : points) {
        out << "g=" << p.g << " d=" << p.d << '\n';
        for (const auto& [cmd, r] : p.results.items()) out << "  " << cmd << ": " << r.dump() << '\n';
      }
      break;
  }
}

}  // namespace univjac
