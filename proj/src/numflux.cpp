#include "htcmhd/numflux.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace htcmhd {

QuadratureRule gauss_legendre(int n) {
  // nodes/weights on [-1,1] from the closed-form expressions, then
  // mapped to [0,1]
  QuadratureRule r;
  r.n = n;
  switch (n) {
    case 1:
      r.node = {0.0};
      r.weight = {2.0};
      break;
    case 2: {
      const double x = 1.0 / std::sqrt(3.0);
      r.node = {-x, x};
      r.weight = {1.0, 1.0};
      break;
    }
    case 3: {
      const double x = std::sqrt(3.0 / 5.0);
      r.node = {-x, 0.0, x};
      r.weight = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
      break;
    }
    case 4: {
      const double a = std::sqrt((3.0 - 2.0 * std::sqrt(6.0 / 5.0)) / 7.0);
      const double b = std::sqrt((3.0 + 2.0 * std::sqrt(6.0 / 5.0)) / 7.0);
      const double wa = (18.0 + std::sqrt(30.0)) / 36.0;
      const double wb = (18.0 - std::sqrt(30.0)) / 36.0;
      r.node = {-b, -a, a, b};
      r.weight = {wb, wa, wa, wb};
      break;
    }
    case 5: {
      const double a = std::sqrt(5.0 - 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
      const double b = std::sqrt(5.0 + 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
      const double wa = (322.0 + 13.0 * std::sqrt(70.0)) / 900.0;
      const double wb = (322.0 - 13.0 * std::sqrt(70.0)) / 900.0;
      r.node = {-b, -a, 0.0, a, b};
      r.weight = {wb, wa, 128.0 / 225.0, wa, wb};
      break;
    }
    default:
      throw std::invalid_argument("gauss_legendre: unsupported point count " +
                                  std::to_string(n));
  }
  for (int i = 0; i < n; ++i) {
    r.node[i] = 0.5 * (r.node[i] + 1.0);
    r.weight[i] *= 0.5;
  }
  return r;
}

Conserved physical_flux_euler(const Conserved& q, const Vec3& n, const GasParams& g) {
  const Vec3 v = q.velocity();
  const double vn = dot(v, n);
  const double p = pressure(q, g);
  Conserved f;
  f[irho] = q.rho() * vn;
  for (int k = 0; k < 3; ++k) f[imom + k] = q[imom + k] * vn + p * n[k];
  f[isig] = q.entropy_density() * vn;
  return f;
}

Conserved euler_ec_flux(const Conserved& ql, const Conserved& qr, const Vec3& n,
                        const QuadratureRule& rule, const GasParams& g) {
  bool euler_equal = true;
  for (int i = irho; i <= isig; ++i) euler_equal = euler_equal && (ql[i] == qr[i]);
  if (euler_equal) return physical_flux_euler(ql, n, g);

  const EulerDual dl = euler_dual(ql, g);
  const EulerDual dr = euler_dual(qr, g);
  Conserved f;
  for (int gp = 0; gp < rule.n; ++gp) {
    const double s = rule.node[gp];
    EulerDual d;
    d.r = dl.r + s * (dr.r - dl.r);
    for (int k = 0; k < 3; ++k) d.v[k] = dl.v[k] + s * (dr.v[k] - dl.v[k]);
    d.T = dl.T + s * (dr.T - dl.T);
    Conserved qs;
    try {
      qs = dual_to_conserved_euler(d, g);
    } catch (const std::domain_error& e) {
      throw std::domain_error("euler_ec_flux: inadmissible path state at node " +
                              std::to_string(gp) + " (s=" + std::to_string(s) +
                              "): " + e.what());
    }
    f += rule.weight[gp] * physical_flux_euler(qs, n, g);
  }
  return f;
}

Mat9 roe_hessian(const Conserved& ql, const Conserved& qr, const QuadratureRule& rule,
                 const GasParams& g) {
  if (ql == qr) return hessian(ql, g);
  Mat9 h{};
  for (int gp = 0; gp < rule.n; ++gp) {
    const Conserved qs = ql + rule.node[gp] * (qr - ql);
    const Mat9 hs = hessian(qs, g);
    for (int i = 0; i < nvar; ++i)
      for (int j = 0; j < nvar; ++j) h[i][j] += rule.weight[gp] * hs[i][j];
  }
  return h;
}

double minbee(double h) { return std::max(0.0, std::min(1.0, h)); }

double viscosity_coefficient(const std::array<double, 4>& rho_stencil, double s_max,
                             double dx, const ViscosityModel& model) {
  if (model.kind == ViscosityModel::Kind::constant) return model.value;
  const double denom = rho_stencil[2] - rho_stencil[1];
  double scale = 0.0;
  for (double r : rho_stencil) scale = std::max(scale, std::abs(r));
  double phi_lim;
  if (std::abs(denom) < 1e-14 * scale) {
    phi_lim = 1.0;  // flat data: no dissipation
  } else {
    const double h_minus = (rho_stencil[1] - rho_stencil[0]) / denom;
    const double h_plus = (rho_stencil[3] - rho_stencil[2]) / denom;
    phi_lim = std::min(minbee(h_minus), minbee(h_plus));
  }
  return 0.5 * (1.0 - phi_lim) * dx * s_max;
}

double fast_magnetosonic_speed(const Conserved& q, const Vec3& n, const GasParams& g) {
  const double rho = q.rho();
  const double a2 = g.gamma * pressure(q, g) / rho;
  const Vec3 B = q.magnetic();
  const double b2 = dot(B, B) / rho;
  const double bn = dot(B, n);
  const double bn2 = bn * bn / rho;
  const double disc = std::max((a2 + b2) * (a2 + b2) - 4.0 * a2 * bn2, 0.0);
  return std::sqrt(0.5 * (a2 + b2 + std::sqrt(disc)));
}

double max_signal_speed(const Conserved& ql, const Conserved& qr, const Vec3& n,
                        double c_h, const GasParams& g) {
  const double sl = std::abs(dot(ql.velocity(), n)) + fast_magnetosonic_speed(ql, n, g);
  const double sr = std::abs(dot(qr.velocity(), n)) + fast_magnetosonic_speed(qr, n, g);
  return std::max({sl, sr, c_h});
}

Conserved dissipative_flux(const Conserved& ql, const Conserved& qr, double eps,
                           double delta) {
  return (eps / delta) * (qr - ql);
}

double entropy_production(const Conserved& ql, const Conserved& qr, double eps,
                          double delta, double T_side, const Mat9& roe_h) {
  if (eps == 0.0) return 0.0;
  const Conserved dq = qr - ql;
  return 0.5 * eps * quadratic_form(roe_h, dq, dq) / (T_side * delta);
}

Mat3 magnetic_stress_flux(const Vec3& Bl, const Vec3& Br) {
  const Vec3 Bbar = 0.5 * (Bl + Br);
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) r[i][k] = -Bbar[i] * Bbar[k];
  return r;
}

double magnetic_pressure_flux(const Vec3& Bl, const Vec3& Br) {
  return 0.5 * (0.5 * dot(Br, Br) + 0.5 * dot(Bl, Bl));
}

BFaceProducts b_face_products(const Conserved& ql, const Conserved& qr) {
  const Vec3 Bl = ql.magnetic(), Br = qr.magnetic();
  const Vec3 vl = ql.velocity(), vr = qr.velocity();
  const Vec3 Bbar = 0.5 * (Bl + Br);
  const Vec3 vbar = 0.5 * (vl + vr);
  BFaceProducts p;
  p.v_face = vbar;
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) {
      p.bv[i][k] = Bbar[i] * vbar[k];
      p.vb[i][k] = 0.5 * (vl[i] * Bl[k] + vr[i] * Br[k]);
    }
  }
  return p;
}

double glm_advection_speed(const Conserved& ql, const Conserved& qr, double mass_flux_n,
                           const Vec3& n) {
  const double e4l = 0.5 * ql.phi() * ql.phi();  // specific cleaning energy
  const double e4r = 0.5 * qr.phi() * qr.phi();
  const double num = mass_flux_n * (e4r - e4l);
  const double den = 0.5 * (ql.rho() * ql.phi() + qr.rho() * qr.phi()) *
                     (qr.phi() - ql.phi());
  if (std::abs(den) < 1e-12 * std::max(1.0, std::abs(num))) {
    const Vec3 vbar = 0.5 * (ql.velocity() + qr.velocity());
    return dot(vbar, n);
  }
  return num / den;
}

PhiFlux glm_phi_flux(const Conserved& ql, const Conserved& qr) {
  PhiFlux f;
  f.rho_face = 0.5 * (ql.rho() + qr.rho());
  if (ql.phi() == qr.phi()) {
    f.phi_face = ql.phi();  // weighted average of equal values, exactly
  } else {
    f.phi_face = (ql.rho() * ql.phi() + qr.rho() * qr.phi()) / (ql.rho() + qr.rho());
  }
  return f;
}

}  // namespace htcmhd
