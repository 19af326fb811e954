#pragma once

#include "htcmhd/types.hpp"

namespace htcmhd {

// Equation of state and energy potentials for ideal MHD with a GLM
// cleaning scalar. The total energy density splits as
//   E1 = rho^gamma/(gamma-1) e^{S/c_v}   (internal)
//   E2 = 1/2 rho v.v                     (kinetic)
//   E3 = 1/2 B.B                         (magnetic)
//   E4 = 1/2 rho phi^2                   (cleaning)
// and every quantity below is an exact partial derivative of their sum
// with respect to the conserved state (rho, m, rho S, B, phi).
//
// All operations throw std::domain_error on rho <= 0 instead of clamping;
// a non-positive density always indicates a scheme failure upstream.

EnergyParts energy(const Conserved& q, const GasParams& g);

/// Full dual vector dE/dq. Identities: beta_i == B_i, psi == rho*phi.
Dual dual(const Conserved& q, const GasParams& g);

/// Hydrodynamic pressure p = rho^gamma e^{S/c_v} == (gamma-1) E1.
double pressure(const Conserved& q, const GasParams& g);

/// Temperature T = dE/d(rho S) = rho^{gamma-1} e^{S/c_v} / ((gamma-1) c_v).
double temperature(const Conserved& q, const GasParams& g);

Conserved primitive_to_conserved(const Primitive& w, const GasParams& g);
Primitive conserved_to_primitive(const Conserved& q, const GasParams& g);

/// Generating potential of the Euler subsystem, L = p.q - (E1+E2) on the
/// (rho, m, rho S) block. Equals the hydrodynamic pressure analytically.
double generating_potential_euler(const Conserved& q, const GasParams& g);

/// Dual vector of the Euler subsystem alone: r is built from E1+E2 only
/// (no +1/2 phi^2 contribution), so that euler_dual is exactly inverted
/// by dual_to_conserved_euler.
EulerDual euler_dual(const Conserved& q, const GasParams& g);

/// Closed-form inverse of euler_dual. Returns a state with the Euler
/// block populated and B = 0, phi = 0. Throws on T <= 0 or a non-finite
/// recovered density.
Conserved dual_to_conserved_euler(const EulerDual& d, const GasParams& g);

/// Analytic Hessian d2E/dq2; symmetric, positive semi-definite on
/// admissible states (requires p >= rho phi^2 for the cleaning block).
Mat9 hessian(const Conserved& q, const GasParams& g);

}  // namespace htcmhd
