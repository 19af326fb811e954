#pragma once

#include <functional>
#include <string>
#include <vector>

#include "htcmhd/cases.hpp"
#include "htcmhd/config.hpp"
#include "htcmhd/io.hpp"
#include "htcmhd/scheme.hpp"
#include "htcmhd/timeint.hpp"

namespace htcmhd {

/// A RunConfig with every case default folded in.
struct ResolvedRun {
  CaseSpec spec;
  Mesh mesh;
  SchemeParams params;
  TimeControls controls;
  RunConfig config;  // with all optionals filled
};

ResolvedRun resolve(const RunConfig& cfg);

struct SimulationResult {
  FieldState state;
  Mesh mesh;
  std::vector<SampleRow> series;
  long steps = 0;
  double min_production_rel = std::numeric_limits<double>::infinity();
  bool failed = false;
  std::string failure;
  double last_valid_time = 0.0;
};

using SnapshotSink = std::function<void(const FieldState&, long step, bool final)>;
using SampleSink = std::function<void(const SampleRow&)>;

/// Advance a resolved run to t_end. Samples the series every
/// config.series_every steps (plus the initial and final states) and
/// invokes the sinks as the run progresses. A failed RK stage is
/// retried with a halved step, at most five times.
SimulationResult simulate(const ResolvedRun& run, const SnapshotSink& snapshot = {},
                          const SampleSink& on_sample = {});

/// CLI `run`: simulate with file writers attached; returns the exit code.
int run_to_files(const RunConfig& cfg);

struct ConvergenceRow {
  int n = 0;
  // errors/orders for rho, m1, sigma, B1 in this order
  std::array<double, 4> errors{};
  std::array<double, 4> orders{};  // NaN in the first row
};

/// Self-refining error study against the case's exact solution.
std::vector<ConvergenceRow> convergence_study(const RunConfig& cfg,
                                              const std::vector<int>& resolutions);

std::string format_convergence_table(const std::vector<ConvergenceRow>& rows);

}  // namespace htcmhd
