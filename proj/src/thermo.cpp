#include "htcmhd/thermo.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace htcmhd {

namespace {

void require_positive_density(const Conserved& q, const char* where) {
  if (!(q.rho() > 0.0)) {
    throw std::domain_error(std::string(where) + ": non-positive density rho=" +
                            std::to_string(q.rho()));
  }
}

}  // namespace

EnergyParts energy(const Conserved& q, const GasParams& g) {
  require_positive_density(q, "energy");
  const double rho = q.rho();
  const double S = q.specific_entropy();
  const Vec3 v = q.velocity();
  const Vec3 B = q.magnetic();
  EnergyParts e;
  e.e1 = std::pow(rho, g.gamma) / (g.gamma - 1.0) * std::exp(S / g.c_v);
  e.e2 = 0.5 * rho * dot(v, v);
  e.e3 = 0.5 * dot(B, B);
  e.e4 = 0.5 * rho * q.phi() * q.phi();
  return e;
}

Dual dual(const Conserved& q, const GasParams& g) {
  require_positive_density(q, "dual");
  const double rho = q.rho();
  const double S = q.specific_entropy();
  const Vec3 v = q.velocity();
  const double T =
      std::pow(rho, g.gamma - 1.0) * std::exp(S / g.c_v) / ((g.gamma - 1.0) * g.c_v);
  Dual d;
  d[irho] = T * (g.gamma * g.c_v - S) - 0.5 * dot(v, v) + 0.5 * q.phi() * q.phi();
  for (int k = 0; k < 3; ++k) d[imom + k] = v[k];
  d[isig] = T;
  for (int k = 0; k < 3; ++k) d[imag + k] = q[imag + k];
  d[iphi] = rho * q.phi();
  return d;
}

double pressure(const Conserved& q, const GasParams& g) {
  require_positive_density(q, "pressure");
  return std::pow(q.rho(), g.gamma) * std::exp(q.specific_entropy() / g.c_v);
}

double temperature(const Conserved& q, const GasParams& g) {
  require_positive_density(q, "temperature");
  return std::pow(q.rho(), g.gamma - 1.0) * std::exp(q.specific_entropy() / g.c_v) /
         ((g.gamma - 1.0) * g.c_v);
}

Conserved primitive_to_conserved(const Primitive& w, const GasParams& g) {
  if (!(w.rho > 0.0)) throw std::domain_error("primitive_to_conserved: rho <= 0");
  if (!(w.p > 0.0)) throw std::domain_error("primitive_to_conserved: p <= 0");
  // invert p = rho^gamma e^{S/c_v}
  const double S = g.c_v * std::log(w.p * std::pow(w.rho, -g.gamma));
  Conserved q;
  q[irho] = w.rho;
  for (int k = 0; k < 3; ++k) q[imom + k] = w.rho * w.v[k];
  q[isig] = w.rho * S;
  for (int k = 0; k < 3; ++k) q[imag + k] = w.B[k];
  q[iphi] = w.phi;
  return q;
}

Primitive conserved_to_primitive(const Conserved& q, const GasParams& g) {
  require_positive_density(q, "conserved_to_primitive");
  Primitive w;
  w.rho = q.rho();
  w.v = q.velocity();
  w.p = pressure(q, g);
  w.B = q.magnetic();
  w.phi = q.phi();
  return w;
}

double generating_potential_euler(const Conserved& q, const GasParams& g) {
  require_positive_density(q, "generating_potential_euler");
  const EulerDual d = euler_dual(q, g);
  const EnergyParts e = energy(q, g);
  const Vec3 m = q.momentum();
  return d.r * q.rho() + dot(d.v, m) + d.T * q.entropy_density() - (e.e1 + e.e2);
}

EulerDual euler_dual(const Conserved& q, const GasParams& g) {
  require_positive_density(q, "euler_dual");
  const double S = q.specific_entropy();
  const Vec3 v = q.velocity();
  const double T =
      std::pow(q.rho(), g.gamma - 1.0) * std::exp(S / g.c_v) / ((g.gamma - 1.0) * g.c_v);
  EulerDual d;
  d.T = T;
  d.v = v;
  d.r = T * (g.gamma * g.c_v - S) - 0.5 * dot(v, v);
  return d;
}

Conserved dual_to_conserved_euler(const EulerDual& d, const GasParams& g) {
  if (!(d.T > 0.0)) {
    throw std::domain_error("dual_to_conserved_euler: non-positive temperature T=" +
                            std::to_string(d.T));
  }
  const double A = (g.gamma - 1.0) * g.c_v * d.T;  // == rho^{gamma-1} e^{S/c_v}
  const double S = g.gamma * g.c_v - (d.r + 0.5 * dot(d.v, d.v)) / d.T;
  const double rho = std::pow(A * std::exp(-S / g.c_v), 1.0 / (g.gamma - 1.0));
  if (!std::isfinite(rho) || !(rho > 0.0)) {
    throw std::domain_error("dual_to_conserved_euler: recovered density not finite");
  }
  Conserved q;
  q[irho] = rho;
  for (int k = 0; k < 3; ++k) q[imom + k] = rho * d.v[k];
  q[isig] = rho * S;
  return q;
}

Mat9 hessian(const Conserved& q, const GasParams& g) {
  require_positive_density(q, "hessian");
  const double rho = q.rho();
  const double S = q.specific_entropy();
  const Vec3 v = q.velocity();
  const double T =
      std::pow(rho, g.gamma - 1.0) * std::exp(S / g.c_v) / ((g.gamma - 1.0) * g.c_v);

  Mat9 h{};
  // internal-energy block in (rho, sigma)
  h[irho][irho] =
      (T / rho) * (g.gamma * (g.gamma - 1.0) * g.c_v - 2.0 * (g.gamma - 1.0) * S +
                   S * S / g.c_v);
  h[irho][isig] = h[isig][irho] = (T / (rho * g.c_v)) * ((g.gamma - 1.0) * g.c_v - S);
  h[isig][isig] = T / (rho * g.c_v);
  // kinetic block
  h[irho][irho] += dot(v, v) / rho;
  for (int k = 0; k < 3; ++k) {
    h[irho][imom + k] = h[imom + k][irho] = -v[k] / rho;
    h[imom + k][imom + k] = 1.0 / rho;
  }
  // magnetic block
  for (int k = 0; k < 3; ++k) h[imag + k][imag + k] = 1.0;
  // cleaning block
  h[irho][iphi] = h[iphi][irho] = q.phi();
  h[iphi][iphi] = rho;
  return h;
}

}  // namespace htcmhd
