#include "htcmhd/diagnostics.hpp"

#include <cmath>

namespace htcmhd {

namespace {

struct KahanSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    const double y = x - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

}  // namespace

Integrals integrals(const FieldState& s, const Mesh& m, const GasParams& g) {
  const int gx = m.gx(), gy = m.gy();
  const double vol = m.volume();
  KahanSum mass, en, ent;
  for (int j = gy; j < gy + m.ny; ++j) {
    for (int i = gx; i < gx + m.nx; ++i) {
      const Conserved& q = s(i, j);
      mass.add(q.rho() * vol);
      en.add(energy(q, g).total() * vol);
      ent.add(q.entropy_density() * vol);
    }
  }
  return {mass.s, en.s, ent.s};
}

double divb_error(const FieldState& s, const Mesh& m) {
  const int gx = m.gx(), gy = m.gy();
  double worst = 0.0;
  for (int j = gy; j < gy + m.ny; ++j) {
    for (int i = gx; i < gx + m.nx; ++i) {
      double div = (s(i + 1, j)[imag] - s(i - 1, j)[imag]) / (2.0 * m.dx);
      if (m.dim == 2)
        div += (s(i, j + 1)[imag + 1] - s(i, j - 1)[imag + 1]) / (2.0 * m.dy);
      worst = std::max(worst, std::abs(div));
    }
  }
  return worst;
}

double l2_error(const FieldState& s, const Mesh& m, const ExactFn& exact, int component) {
  const int gx = m.gx(), gy = m.gy();
  const double vol = m.volume();
  KahanSum acc;
  for (int j = gy; j < gy + m.ny; ++j) {
    for (int i = gx; i < gx + m.nx; ++i) {
      const double diff =
          s(i, j)[component] - exact(m.center_x(i), m.center_y(j))[component];
      acc.add(vol * diff * diff);
    }
  }
  return std::sqrt(acc.s);
}

std::vector<double> observed_order(const std::vector<double>& errors, double factor) {
  std::vector<double> orders;
  for (size_t k = 1; k < errors.size(); ++k) {
    orders.push_back(std::log(errors[k - 1] / errors[k]) / std::log(factor));
  }
  return orders;
}

}  // namespace htcmhd
