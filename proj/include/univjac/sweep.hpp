#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "univjac/acceptance.hpp"

namespace univjac {

enum class SweepFormat { json, tsv, pretty };

SweepFormat parse_sweep_format(const std::string& s);

struct SweepSpec {
  GridSpec grid;
  std::vector<std::string> commands;  // invariants, boundary, presentation, xi, theta, independence, compare, picj0
  SweepFormat format = SweepFormat::pretty;
};

struct SweepPoint {
  std::int64_t g;
  std::int64_t d;
  nlohmann::ordered_json results;  // command -> result, or {"error": ..., "kind": ...}
  bool domain_error = false;
  bool verification_error = false;
};

/// Thread cap from UNIVJAC_THREADS, else the OpenMP default.
int sweep_threads();

/// Evaluates every command at every grid point, in parallel across points;
/// the result order follows the grid regardless of scheduling.
std::vector<SweepPoint> run_sweep(const SweepSpec& spec, int threads);

/// Serial reference for run_sweep.
std::vector<SweepPoint> run_sweep_serial(const SweepSpec& spec);

void write_sweep(const std::vector<SweepPoint>& points, SweepFormat format, std::ostream& out);

}  // namespace univjac
