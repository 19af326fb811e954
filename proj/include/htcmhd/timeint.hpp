#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "htcmhd/scheme.hpp"

namespace htcmhd {

struct TimeControls {
  double cfl = 0.5;
  double t_end = 0.0;
  std::optional<double> fixed_dt;
  long max_steps = 10'000'000;
};

/// CFL step size dt = CFL / (lambda_x/dx + lambda_y/dy), with the
/// per-axis maximum signal speed taken over all interior cells. The
/// result is clipped so the step lands exactly on t_end.
double cfl_dt(const FieldState& s, const Mesh& m, const SchemeParams& p, double cfl,
              double t_now, double t_end);

class step_error : public std::runtime_error {
 public:
  step_error(int stage_, const std::string& what)
      : std::runtime_error("rk4 stage " + std::to_string(stage_) + ": " + what),
        stage(stage_) {}
  int stage;
};

/// Interior right-hand side of the semi-discrete system. Receives a
/// mutable stage state so implementations can refresh ghosts in place.
using RhsFunc = std::function<RhsOutput(FieldState&)>;

/// Classical four-stage RK4. Every stage state is checked for
/// admissibility; a failure throws step_error with the stage index so
/// the driver can retry with a smaller step.
FieldState rk4_step(const FieldState& s, const Mesh& m, double dt, const RhsFunc& f);

}  // namespace htcmhd
