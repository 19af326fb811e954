#pragma once

#include <functional>
#include <vector>

#include "htcmhd/grid.hpp"
#include "htcmhd/thermo.hpp"

namespace htcmhd {

struct Integrals {
  double mass = 0.0;
  double energy = 0.0;
  double entropy = 0.0;
};

/// Volume integrals of rho, total energy density and rho*S over the
/// interior, accumulated with Kahan compensation in index order.
Integrals integrals(const FieldState& s, const Mesh& m, const GasParams& g);

/// L-infinity norm of the central-difference divergence of B over the
/// interior cells; ghosts must be filled.
double divb_error(const FieldState& s, const Mesh& m);

/// Exact solution sampled at cell centers, conserved variables.
using ExactFn = std::function<Conserved(double x, double y)>;

/// sqrt( sum |cell| (q_c - q_exact)^2 ) for one component.
double l2_error(const FieldState& s, const Mesh& m, const ExactFn& exact, int component);

/// Observed convergence orders log(e_{k-1}/e_k)/log(factor).
std::vector<double> observed_order(const std::vector<double>& errors,
                                   double factor = 2.0);

}  // namespace htcmhd
