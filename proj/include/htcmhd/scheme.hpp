#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "htcmhd/grid.hpp"
#include "htcmhd/numflux.hpp"

namespace htcmhd {

struct SchemeParams {
  GasParams gas;
  double c_h = 2.0;
  ViscosityModel viscosity;
  QuadratureRule quad;  // for the EC flux and the Roe Hessian

  static SchemeParams make(GasParams gas, double c_h, ViscosityModel visc, int n_gp) {
    return {gas, c_h, visc, gauss_legendre(n_gp)};
  }
};

struct FaceGeom {
  Vec3 normal{1.0, 0.0, 0.0};
  double delta = 1.0;  // center distance across the face
};

/// Both cells' inviscid+dissipative bracket for one face, plus the
/// shared face values. The bracket is the per-face right-hand-side
/// term before scaling by |face area| / |cell volume|.
struct FaceAssembly {
  Conserved to_left;
  Conserved to_right;
  FaceContribution face;
};

/// Assemble one face. eps is supplied by the caller (the limiter
/// stencil lives on the grid, not on the face pair).
FaceAssembly face_assemble(const Conserved& ql, const Conserved& qr,
                           const FaceGeom& geom, double eps, const SchemeParams& p);

/// Energy audit of a face: fluctuations D_E and the normal total-energy
/// flux evaluated on both sides. Diagnostics only, never time-stepped.
struct EnergyFluctuation {
  double d_left = 0.0;   // p_l . (inviscid fluctuation toward l)
  double d_right = 0.0;  // p_r . (inviscid fluctuation toward r)
  double flux_left = 0.0;
  double flux_right = 0.0;
};

EnergyFluctuation energy_fluctuation(const Conserved& ql, const Conserved& qr,
                                     const FaceGeom& geom, const FaceContribution& face,
                                     const SchemeParams& p);

/// Normal total-energy flux F = v_n(E1+E2+p) + v_n E3 + v_n E4
/// + v_i R_ik n_k + v_n mu + c_h phi B_n of a single state.
double energy_flux_normal(const Conserved& q, const Vec3& n, double c_h,
                          const GasParams& g);

struct RhsOutput {
  std::vector<Conserved> dqdt;  // interior cells, row-major
  // min over faces of (dq.H~ dq) / (|dq|^2 |H~|_F); +inf when no
  // dissipative face was active
  double min_production_rel = std::numeric_limits<double>::infinity();
};

class admissibility_error : public std::runtime_error {
 public:
  admissibility_error(int i, int j, double time, const std::string& what)
      : std::runtime_error("inadmissible state at cell (" + std::to_string(i) + "," +
                           std::to_string(j) + "), t=" + std::to_string(time) + ": " +
                           what),
        cell_i(i),
        cell_j(j) {}
  int cell_i, cell_j;
};

/// Semi-discrete right hand side. Refreshes the ghost layers of s
/// (idempotent if they are already filled). Face values are computed
/// once per face into per-face records and reduced per cell in index
/// order, so the result does not depend on the face traversal order.
RhsOutput rhs(FieldState& s, const Mesh& m, const BoundaryCondition& bc,
              const SchemeParams& p);

}  // namespace htcmhd
