#pragma once

#include <array>
#include <cmath>

namespace htcmhd {

// Component layout of the conserved state vector:
//   (rho, m1, m2, m3, rho*S, B1, B2, B3, phi)
inline constexpr int nvar = 9;
inline constexpr int irho = 0;
inline constexpr int imom = 1;  // imom + k, k = 0..2
inline constexpr int isig = 4;  // entropy density sigma = rho*S
inline constexpr int imag = 5;  // imag + k, k = 0..2
inline constexpr int iphi = 8;  // GLM cleaning scalar

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;
using Mat9 = std::array<std::array<double, nvar>, nvar>;

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline Vec3 operator*(double s, const Vec3& a) {
  return {s * a[0], s * a[1], s * a[2]};
}

/// Conserved state of one cell.
struct Conserved {
  std::array<double, nvar> u{};

  double& operator[](int i) { return u[i]; }
  const double& operator[](int i) const { return u[i]; }

  double rho() const { return u[irho]; }
  Vec3 momentum() const { return {u[imom], u[imom + 1], u[imom + 2]}; }
  double entropy_density() const { return u[isig]; }
  Vec3 magnetic() const { return {u[imag], u[imag + 1], u[imag + 2]}; }
  double phi() const { return u[iphi]; }

  Vec3 velocity() const {
    const double inv = 1.0 / u[irho];
    return {u[imom] * inv, u[imom + 1] * inv, u[imom + 2] * inv};
  }
  double specific_entropy() const { return u[isig] / u[irho]; }

  bool operator==(const Conserved&) const = default;
};

inline Conserved operator+(const Conserved& a, const Conserved& b) {
  Conserved c;
  for (int i = 0; i < nvar; ++i) c[i] = a[i] + b[i];
  return c;
}

inline Conserved operator-(const Conserved& a, const Conserved& b) {
  Conserved c;
  for (int i = 0; i < nvar; ++i) c[i] = a[i] - b[i];
  return c;
}

inline Conserved operator*(double s, const Conserved& a) {
  Conserved c;
  for (int i = 0; i < nvar; ++i) c[i] = s * a[i];
  return c;
}

inline Conserved& operator+=(Conserved& a, const Conserved& b) {
  for (int i = 0; i < nvar; ++i) a[i] += b[i];
  return a;
}

/// All components finite and the density strictly positive. With an
/// entropy-based state the pressure p = rho^gamma e^{S/c_v} and the
/// temperature are automatically positive whenever rho > 0.
inline bool admissible(const Conserved& q) {
  for (int i = 0; i < nvar; ++i) {
    if (!std::isfinite(q[i])) return false;
  }
  return q[irho] > 0.0;
}

/// Primitive description used for initial data: (rho, v, p, B, phi).
struct Primitive {
  double rho = 0.0;
  Vec3 v{};
  double p = 0.0;
  Vec3 B{};
  double phi = 0.0;
};

/// Thermodynamic dual vector p = dE/dq = (r, v_i, T, beta_i, psi).
struct Dual {
  std::array<double, nvar> p{};

  double& operator[](int i) { return p[i]; }
  const double& operator[](int i) const { return p[i]; }

  double r() const { return p[irho]; }
  Vec3 velocity() const { return {p[imom], p[imom + 1], p[imom + 2]}; }
  double temperature() const { return p[isig]; }
  Vec3 beta() const { return {p[imag], p[imag + 1], p[imag + 2]}; }
  double psi() const { return p[iphi]; }
};

/// Dual vector restricted to the Euler block (r, v_i, T), with r built
/// from the internal + kinetic energy only.
struct EulerDual {
  double r = 0.0;
  Vec3 v{};
  double T = 0.0;
};

/// The four contributions to the total energy density.
struct EnergyParts {
  double e1 = 0.0;  // internal
  double e2 = 0.0;  // kinetic
  double e3 = 0.0;  // magnetic
  double e4 = 0.0;  // cleaning
  double total() const { return e1 + e2 + e3 + e4; }
};

struct GasParams {
  double gamma = 5.0 / 3.0;
  double c_v = 1.0;
};

inline double quadratic_form(const Mat9& m, const Conserved& x, const Conserved& y) {
  double s = 0.0;
  for (int i = 0; i < nvar; ++i) {
    double row = 0.0;
    for (int j = 0; j < nvar; ++j) row += m[i][j] * y[j];
    s += x[i] * row;
  }
  return s;
}

inline Conserved matvec(const Mat9& m, const Conserved& x) {
  Conserved r;
  for (int i = 0; i < nvar; ++i) {
    double s = 0.0;
    for (int j = 0; j < nvar; ++j) s += m[i][j] * x[j];
    r[i] = s;
  }
  return r;
}

}  // namespace htcmhd
