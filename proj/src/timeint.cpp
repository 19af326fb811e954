#include "htcmhd/timeint.hpp"

#include <cmath>

namespace htcmhd {

double cfl_dt(const FieldState& s, const Mesh& m, const SchemeParams& p, double cfl,
              double t_now, double t_end) {
  const int gx = m.gx(), gy = m.gy();
  double lx = 0.0, ly = 0.0;
  const Vec3 ex{1.0, 0.0, 0.0}, ey{0.0, 1.0, 0.0};
  for (int j = gy; j < gy + m.ny; ++j) {
    for (int i = gx; i < gx + m.nx; ++i) {
      const Conserved& q = s(i, j);
      lx = std::max(lx, max_signal_speed(q, q, ex, p.c_h, p.gas));
      if (m.dim == 2) ly = std::max(ly, max_signal_speed(q, q, ey, p.c_h, p.gas));
    }
  }
  double denom = lx / m.dx;
  if (m.dim == 2) denom += ly / m.dy;
  if (!std::isfinite(denom) || denom <= 0.0)
    throw std::runtime_error("cfl_dt: non-finite signal speeds");
  double dt = cfl / denom;
  if (t_now + dt > t_end) dt = t_end - t_now;
  return dt;
}

namespace {

FieldState stage_state(const FieldState& base, const Mesh& m,
                       const std::vector<Conserved>& k, double coef, int stage) {
  FieldState s = base;
  const int gx = m.gx(), gy = m.gy();
  for (int j = 0; j < m.ny; ++j) {
    for (int i = 0; i < m.nx; ++i) {
      Conserved& q = s(gx + i, gy + j);
      q += coef * k[static_cast<size_t>(j) * m.nx + i];
      if (!admissible(q))
        throw step_error(stage, "inadmissible state at cell (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
    }
  }
  return s;
}

}  // namespace

FieldState rk4_step(const FieldState& s, const Mesh& m, double dt, const RhsFunc& f) {
  auto eval = [&](FieldState& u, int stage) {
    try {
      return f(u);
    } catch (const admissibility_error& e) {
      throw step_error(stage, e.what());
    }
  };

  FieldState s1 = s;
  const RhsOutput k1 = eval(s1, 1);
  FieldState s2 = stage_state(s, m, k1.dqdt, 0.5 * dt, 2);
  s2.time = s.time + 0.5 * dt;
  const RhsOutput k2 = eval(s2, 2);
  FieldState s3 = stage_state(s, m, k2.dqdt, 0.5 * dt, 3);
  s3.time = s.time + 0.5 * dt;
  const RhsOutput k3 = eval(s3, 3);
  FieldState s4 = stage_state(s, m, k3.dqdt, dt, 4);
  s4.time = s.time + dt;
  const RhsOutput k4 = eval(s4, 4);

  FieldState out = s;
  const int gx = m.gx(), gy = m.gy();
  for (int j = 0; j < m.ny; ++j) {
    for (int i = 0; i < m.nx; ++i) {
      const size_t c = static_cast<size_t>(j) * m.nx + i;
      Conserved& q = out(gx + i, gy + j);
      q += (dt / 6.0) * (k1.dqdt[c] + 2.0 * k2.dqdt[c] + 2.0 * k3.dqdt[c] + k4.dqdt[c]);
      if (!admissible(q))
        throw step_error(4, "inadmissible state at cell (" + std::to_string(i) + "," +
                                std::to_string(j) + ") after update");
    }
  }
  out.time = s.time + dt;
  return out;
}

}  // namespace htcmhd
