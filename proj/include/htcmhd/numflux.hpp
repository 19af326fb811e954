#pragma once

#include "htcmhd/thermo.hpp"
#include "htcmhd/types.hpp"

namespace htcmhd {

/// Gauss-Legendre rule mapped to [0,1]. Weights sum to one; exact for
/// polynomials of degree <= 2n-1.
struct QuadratureRule {
  int n = 0;
  std::array<double, 5> node{};
  std::array<double, 5> weight{};
};

/// Supported point counts: 1..5.
QuadratureRule gauss_legendre(int n);

/// Physical flux of the Euler subsystem in direction n (axis-aligned
/// unit normal): f = (rho v_n, rho v_i v_n + p n_i, rho S v_n, 0, 0).
Conserved physical_flux_euler(const Conserved& q, const Vec3& n, const GasParams& g);

/// Entropy-compatible Euler flux: the segment path between the two
/// Euler dual vectors is integrated with the given quadrature rule,
///   f = sum_g w_g f( q(p_l + s_g (p_r - p_l)) ).
/// Consistent by construction: equal Euler blocks short-circuit to the
/// physical flux. Throws if a path state is inadmissible.
Conserved euler_ec_flux(const Conserved& ql, const Conserved& qr, const Vec3& n,
                        const QuadratureRule& rule, const GasParams& g);

/// Path-averaged energy Hessian satisfying the Roe property
/// H~ (q_r - q_l) ~= p_r - p_l up to quadrature error.
Mat9 roe_hessian(const Conserved& ql, const Conserved& qr, const QuadratureRule& rule,
                 const GasParams& g);

/// Clamped slope ratio, max(0, min(1, h)).
double minbee(double h);

struct ViscosityModel {
  enum class Kind { limiter, constant };
  Kind kind = Kind::limiter;
  double value = 0.0;  // used by constant mode
};

/// Rusanov-type viscosity blended off by the minbee limiter:
///   eps = 1/2 (1 - phi_lim) dx s_max,
/// with density slope ratios taken from the four cells straddling the
/// face. A flat face jump (|rho_r - rho_l| below round-off relative to
/// the stencil) yields phi_lim = 1 and eps = 0. Constant mode ignores
/// the stencil and returns the configured value.
double viscosity_coefficient(const std::array<double, 4>& rho_stencil, double s_max,
                             double dx, const ViscosityModel& model);

/// Fast magnetosonic speed in direction n.
double fast_magnetosonic_speed(const Conserved& q, const Vec3& n, const GasParams& g);

/// max over both states of |v.n| + c_f, floored by the cleaning speed c_h.
double max_signal_speed(const Conserved& ql, const Conserved& qr, const Vec3& n,
                        double c_h, const GasParams& g);

/// g = eps (q_r - q_l) / delta, componentwise.
Conserved dissipative_flux(const Conserved& ql, const Conserved& qr, double eps,
                           double delta);

/// One-sided entropy production Pi = 1/2 eps (dq/T) . H~ (dq/delta),
/// non-negative whenever H~ is positive semi-definite.
double entropy_production(const Conserved& ql, const Conserved& qr, double eps,
                          double delta, double T_side, const Mat9& roe_h);

/// R_{ik} = -avg(B)_i avg(B)_k with arithmetic averages.
Mat3 magnetic_stress_flux(const Vec3& Bl, const Vec3& Br);

/// mu = arithmetic mean of the two magnetic energy densities.
double magnetic_pressure_flux(const Vec3& Bl, const Vec3& Br);

struct BFaceProducts {
  Mat3 bv;      // (B_i v_k): outer product of arithmetic averages
  Mat3 vb;      // (v_i B_k): arithmetic average of pointwise products
  Vec3 v_face;  // arithmetic velocity average
};

BFaceProducts b_face_products(const Conserved& ql, const Conserved& qr);

/// Weighted advection speed of the cleaning scalar,
///   u~ = f_rho_n (E4_r - E4_l) / ( avg(rho phi) (phi_r - phi_l) ),
/// with E4 the specific cleaning energy 1/2 phi^2. Falls back to the
/// arithmetic-average normal velocity when the denominator degenerates.
double glm_advection_speed(const Conserved& ql, const Conserved& qr, double mass_flux_n,
                           const Vec3& n);

struct PhiFlux {
  double phi_face = 0.0;  // density-weighted average of phi
  double rho_face = 0.0;  // arithmetic density average
};

PhiFlux glm_phi_flux(const Conserved& ql, const Conserved& qr);

/// Everything a face contributes to both adjacent cells. Built once per
/// face and shared so the pairwise energy cancellation is exact.
struct FaceContribution {
  Conserved euler_flux;    // EC flux along the face normal
  Mat3 stress;             // R^{lr}
  double mag_pressure = 0.0;
  BFaceProducts products;
  double u_glm = 0.0;
  double phi_face = 0.0;
  double rho_face = 0.0;
  Conserved g;             // dissipative flux
  double eps = 0.0;
  Mat9 roe_h{};            // valid only when eps > 0
  bool have_roe_h = false;
  double prod_left = 0.0;   // Pi^{lr,-}
  double prod_right = 0.0;  // Pi^{rl,-}
};

}  // namespace htcmhd
