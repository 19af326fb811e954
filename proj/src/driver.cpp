#include "htcmhd/driver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "htcmhd/diagnostics.hpp"

namespace htcmhd {

ResolvedRun resolve(const RunConfig& cfg) {
  ResolvedRun r;
  r.spec = find_case(cfg.case_name);
  r.config = cfg;

  if (cfg.gamma) r.spec.gamma = *cfg.gamma;
  r.config.gamma = r.spec.gamma;
  if (cfg.c_h) r.spec.c_h = *cfg.c_h;
  r.config.c_h = r.spec.c_h;
  if (cfg.t_end) r.spec.t_end = *cfg.t_end;
  r.config.t_end = r.spec.t_end;

  if (cfg.eps) {
    if (*cfg.eps == "limiter") {
      r.spec.viscosity = {ViscosityModel::Kind::limiter, 0.0};
    } else {
      r.spec.viscosity = {ViscosityModel::Kind::constant, std::stod(*cfg.eps)};
    }
  }
  if (r.spec.viscosity.kind == ViscosityModel::Kind::limiter) {
    r.config.eps = "limiter";
  } else {
    std::ostringstream os;
    os.precision(17);
    os << r.spec.viscosity.value;
    r.config.eps = os.str();
  }

  const int nx = cfg.nx.value_or(r.spec.default_nx);
  const int ny = r.spec.dim == 2 ? cfg.ny.value_or(cfg.nx.value_or(r.spec.default_ny)) : 1;
  r.config.nx = nx;
  r.config.ny = ny;
  r.mesh = build_mesh(r.spec.dim, nx, ny, r.spec.x_min, r.spec.x_max, r.spec.y_min,
                      r.spec.y_max);

  if (!(r.spec.gamma > 1.0)) throw std::invalid_argument("gamma must exceed 1");
  if (!(cfg.c_v > 0.0)) throw std::invalid_argument("c_v must be positive");
  if (!(cfg.cfl > 0.0) || cfg.cfl > 1.0)
    throw std::invalid_argument("cfl must lie in (0, 1]");
  if (r.spec.c_h < 0.0) throw std::invalid_argument("c_h must be non-negative");
  if (r.spec.viscosity.kind == ViscosityModel::Kind::constant &&
      r.spec.viscosity.value < 0.0)
    throw std::invalid_argument("eps must be non-negative");
  if (cfg.n_gp < 1 || cfg.n_gp > 5)
    throw std::invalid_argument("ngp must lie in 1..5");

  r.params = SchemeParams::make({r.spec.gamma, cfg.c_v}, r.spec.c_h, r.spec.viscosity,
                                cfg.n_gp);
  r.controls = {cfg.cfl, r.spec.t_end, cfg.fixed_dt, cfg.max_steps};
  return r;
}

SimulationResult simulate(const ResolvedRun& run, const SnapshotSink& snapshot,
                          const SampleSink& on_sample) {
  const Mesh& mesh = run.mesh;
  const SchemeParams& params = run.params;
  const BoundaryCondition& bc = run.spec.bc;

  SimulationResult res;
  res.mesh = mesh;
  res.state = init_state(run.spec, mesh, params.gas);

  double min_prod = std::numeric_limits<double>::infinity();
  const RhsFunc rhs_fn = [&](FieldState& u) {
    RhsOutput out = rhs(u, mesh, bc, params);
    min_prod = std::min(min_prod, out.min_production_rel);
    return out;
  };

  const auto sample = [&](FieldState& s, double dt) {
    fill_ghosts(s, mesh, bc);
    const Integrals ints = integrals(s, mesh, params.gas);
    const SampleRow row{s.time,       ints.mass,           ints.energy,
                        ints.entropy, divb_error(s, mesh), dt};
    res.series.push_back(row);
    if (on_sample) on_sample(row);
  };

  sample(res.state, 0.0);
  if (snapshot) snapshot(res.state, 0, false);

  const double t_end = run.controls.t_end;
  long step = 0;
  while (res.state.time < t_end && step < run.controls.max_steps) {
    double dt = run.controls.fixed_dt
                    ? std::min(*run.controls.fixed_dt, t_end - res.state.time)
                    : cfl_dt(res.state, mesh, params, run.controls.cfl, res.state.time,
                             t_end);
    bool advanced = false;
    for (int attempt = 0; attempt <= 5 && !advanced; ++attempt) {
      try {
        res.state = rk4_step(res.state, mesh, dt, rhs_fn);
        advanced = true;
      } catch (const step_error& e) {
        if (attempt == 5) {
          res.failed = true;
          res.failure = e.what();
          res.last_valid_time = res.state.time;
          res.steps = step;
          res.min_production_rel = min_prod;
          return res;
        }
        dt *= 0.5;
      }
    }
    ++step;
    if (step % std::max(1, run.config.series_every) == 0 || res.state.time >= t_end)
      sample(res.state, dt);
    if (snapshot && run.config.snapshot_every > 0 &&
        step % run.config.snapshot_every == 0)
      snapshot(res.state, step, false);
  }
  res.steps = step;
  res.min_production_rel = min_prod;
  res.last_valid_time = res.state.time;
  if (snapshot) snapshot(res.state, step, true);
  return res;
}

int run_to_files(const RunConfig& cfg) {
  const ResolvedRun run = resolve(cfg);
  namespace fs = std::filesystem;
  fs::create_directories(run.config.out_dir);
  write_manifest(run.config.out_dir + "/manifest.txt", to_key_values(run.config));

  SeriesWriter series(run.config.out_dir + "/series.csv");
  const SnapshotSink snap_sink = [&](const FieldState& s, long step, bool final) {
    std::ostringstream name;
    if (final)
      name << run.config.out_dir << "/snapshot_final.csv";
    else
      name << run.config.out_dir << "/snapshot_" << std::setfill('0') << std::setw(6)
           << step << ".csv";
    write_snapshot(name.str(), s, run.mesh, run.params.gas);
  };
  const SampleSink sample_sink = [&](const SampleRow& row) { series.append(row); };

  const SimulationResult sim = simulate(run, snap_sink, sample_sink);
  if (sim.failed) {
    std::cerr << "run failed: " << sim.failure
              << " (last valid time t=" << sim.last_valid_time << ")\n";
    std::ofstream status(run.config.out_dir + "/FAILED");
    status << "t=" << sim.last_valid_time << "\n" << sim.failure << "\n";
    return 1;
  }
  std::cout << "completed " << sim.steps << " steps to t=" << sim.state.time
            << ", output in " << run.config.out_dir << "\n";
  return 0;
}

std::vector<ConvergenceRow> convergence_study(const RunConfig& cfg,
                                              const std::vector<int>& resolutions) {
  const ResolvedRun probe = resolve(cfg);
  if (!probe.spec.exact)
    throw std::invalid_argument("case '" + probe.spec.name +
                                "' has no exact solution for a convergence study");
  constexpr std::array<int, 4> comps = {irho, imom, isig, imag};
  std::vector<ConvergenceRow> rows;
  for (int n : resolutions) {
    RunConfig c = cfg;
    c.nx = n;
    c.ny = n;
    const ResolvedRun run = resolve(c);
    const SimulationResult res = simulate(run);
    if (res.failed) throw std::runtime_error("convergence run failed: " + res.failure);
    const auto exact_fn = [&](double x, double y) {
      return primitive_to_conserved(run.spec.exact(x, y, res.state.time),
                                    run.params.gas);
    };
    ConvergenceRow row;
    row.n = n;
    for (size_t k = 0; k < comps.size(); ++k)
      row.errors[k] = l2_error(res.state, run.mesh, exact_fn, comps[k]);
    row.orders.fill(std::numeric_limits<double>::quiet_NaN());
    if (!rows.empty()) {
      const double factor = static_cast<double>(n) / rows.back().n;
      for (size_t k = 0; k < comps.size(); ++k)
        row.orders[k] =
            std::log(rows.back().errors[k] / row.errors[k]) / std::log(factor);
    }
    rows.push_back(row);
  }
  return rows;
}

std::string format_convergence_table(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream os;
  os << "    N        rho         m1      sigma         B1     O(rho)  O(m1)  "
        "O(sig)  O(B1)\n";
  for (const ConvergenceRow& r : rows) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%5d  %9.3e  %9.3e  %9.3e  %9.3e", r.n, r.errors[0],
                  r.errors[1], r.errors[2], r.errors[3]);
    os << buf;
    if (std::isnan(r.orders[0])) {
      os << "\n";
    } else {
      std::snprintf(buf, sizeof(buf), "    %5.2f  %5.2f   %5.2f  %5.2f\n", r.orders[0],
                    r.orders[1], r.orders[2], r.orders[3]);
      os << buf;
    }
  }
  return os.str();
}

}  // namespace htcmhd
