#include "htcmhd/cases.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "htcmhd/thermo.hpp"

namespace htcmhd {

Primitive vortex(double x, double y) {
  const double r2 = (x - 5.0) * (x - 5.0) + (y - 5.0) * (y - 5.0);
  const double f = std::exp(0.5 * (1.0 - r2));
  Primitive w;
  w.rho = 1.0;
  w.v = {f * (5.0 - y), f * (x - 5.0), 0.0};
  w.p = 0.5 * std::numbers::e - 0.5 * r2 * std::exp(-(r2 - 1.0));
  w.B = {f * (5.0 - y), f * (x - 5.0), 0.0};
  w.phi = 0.0;
  return w;
}

Primitive vortex_exact(double x, double y, double /*t*/) {
  return vortex(x, y);  // stationary
}

Primitive riemann(int case_id, double x) {
  const double s = 1.0 / std::sqrt(4.0 * std::numbers::pi);
  Primitive L, R;
  double xd = 0.0;
  switch (case_id) {
    case 1:
      L = {1.0, {0.0, 0.0, 0.0}, 1.0, {0.75, 1.0, 0.0}, 0.0};
      R = {0.125, {0.0, 0.0, 0.0}, 0.1, {0.75, -1.0, 0.0}, 0.0};
      xd = 0.0;
      break;
    case 2:
      L = {1.08, {1.2, 0.01, 0.5}, 0.95, {2.0 * s, 3.6 * s, 2.0 * s}, 0.0};
      R = {0.9891, {-0.0131, 0.0269, 0.010037}, 0.97159,
           {2.0 * s, 4.0244 * s, 2.0026 * s}, 0.0};
      xd = -0.1;
      break;
    case 3:
      L = {1.7, {0.0, 0.0, 0.0}, 1.7, {1.1, 1.0, 0.0}, 0.0};
      R = {0.2, {0.0, 0.0, -1.49689}, 0.2, {1.1, 2.7859 * s, 2.1921 * s}, 0.0};
      xd = -0.1;
      break;
    case 4:
      L = {1.0, {0.0, 0.0, 0.0}, 1.0, {1.3, 1.0, 0.0}, 0.0};
      R = {0.4, {0.0, 0.0, 0.0}, 0.4, {1.3, -1.0, 0.0}, 0.0};
      xd = 0.0;
      break;
    default:
      throw std::invalid_argument("riemann: case_id must be 1..4");
  }
  return x < xd ? L : R;
}

Primitive orszag_tang(double x, double y) {
  const double gamma = 5.0 / 3.0;
  Primitive w;
  w.rho = gamma * gamma;
  w.v = {-std::sin(y), std::sin(x), 0.0};
  w.p = gamma;
  w.B = {-std::sin(y), std::sin(2.0 * x), 0.0};
  w.phi = 0.0;
  return w;
}

Primitive rotor(double x, double y) {
  const double s = 1.0 / std::sqrt(4.0 * std::numbers::pi);
  const double r = std::sqrt(x * x + y * y);
  Primitive w;
  w.p = 1.0;
  w.B = {2.5 * s, 0.0, 0.0};
  w.phi = 0.0;
  if (r <= 0.1) {
    w.rho = 10.0;
    w.v = {-10.0 * y, 10.0 * x, 0.0};  // omega x r with omega = (0,0,10)
  } else {
    w.rho = 1.0;
    w.v = {0.0, 0.0, 0.0};
  }
  return w;
}

Primitive blast(double x, double y) {
  const double s = 1.0 / std::sqrt(4.0 * std::numbers::pi);
  const double r = std::sqrt(x * x + y * y);
  Primitive w;
  w.rho = 1.0;
  w.v = {0.0, 0.0, 0.0};
  w.B = {100.0 * s, 0.0, 0.0};
  w.p = r < 0.1 ? 1000.0 : 0.1;
  w.phi = 0.0;
  return w;
}

namespace {

std::vector<CaseSpec> make_registry() {
  constexpr double pi = std::numbers::pi;
  std::vector<CaseSpec> reg;

  CaseSpec v;
  v.name = "vortex";
  v.dim = 2;
  v.x_min = 0.0; v.x_max = 10.0; v.y_min = 0.0; v.y_max = 10.0;
  v.default_nx = v.default_ny = 64;
  v.gamma = 5.0 / 3.0;
  v.viscosity = {ViscosityModel::Kind::constant, 0.0};
  v.c_h = 2.0;
  v.bc = periodic_bc();
  v.t_end = 0.25;
  v.initial = vortex;
  v.exact = vortex_exact;
  reg.push_back(v);

  const double rp_tend[4] = {0.1, 0.2, 0.15, 0.16};
  for (int id = 1; id <= 4; ++id) {
    CaseSpec rp;
    rp.name = "rp" + std::to_string(id);
    rp.dim = 1;
    rp.x_min = -0.5; rp.x_max = 0.5;
    rp.default_nx = 1000; rp.default_ny = 1;
    rp.gamma = 5.0 / 3.0;
    rp.viscosity = {ViscosityModel::Kind::limiter, 0.0};
    rp.c_h = 2.0;
    rp.bc = transmissive_bc();
    rp.t_end = rp_tend[id - 1];
    rp.initial = [id](double x, double) { return riemann(id, x); };
    reg.push_back(rp);
  }

  CaseSpec ot;
  ot.name = "orszag_tang";
  ot.dim = 2;
  ot.x_min = 0.0; ot.x_max = 2.0 * pi; ot.y_min = 0.0; ot.y_max = 2.0 * pi;
  ot.default_nx = ot.default_ny = 128;
  ot.gamma = 5.0 / 3.0;
  ot.viscosity = {ViscosityModel::Kind::constant, 2e-3};
  ot.c_h = 2.0;
  ot.bc = periodic_bc();
  ot.t_end = 5.0;
  ot.initial = orszag_tang;
  reg.push_back(ot);

  CaseSpec ro;
  ro.name = "rotor";
  ro.dim = 2;
  ro.x_min = -0.5; ro.x_max = 0.5; ro.y_min = -0.5; ro.y_max = 0.5;
  ro.default_nx = ro.default_ny = 200;
  ro.gamma = 1.4;
  ro.viscosity = {ViscosityModel::Kind::constant, 1e-4};
  ro.c_h = 2.0;
  ro.bc = transmissive_bc();
  ro.t_end = 0.25;
  ro.initial = rotor;
  reg.push_back(ro);

  CaseSpec bl;
  bl.name = "blast";
  bl.dim = 2;
  bl.x_min = -0.5; bl.x_max = 0.5; bl.y_min = -0.5; bl.y_max = 0.5;
  bl.default_nx = bl.default_ny = 200;
  bl.gamma = 1.4;
  bl.viscosity = {ViscosityModel::Kind::constant, 5e-3};
  bl.c_h = 2.0;
  bl.bc = transmissive_bc();
  bl.t_end = 0.01;
  bl.initial = blast;
  reg.push_back(bl);

  return reg;
}

const std::vector<CaseSpec>& registry() {
  static const std::vector<CaseSpec> reg = make_registry();
  return reg;
}

}  // namespace

const CaseSpec& find_case(const std::string& name) {
  for (const CaseSpec& c : registry()) {
    if (c.name == name) return c;
  }
  throw std::invalid_argument("unknown case '" + name + "'");
}

std::vector<std::string> case_names() {
  std::vector<std::string> names;
  for (const CaseSpec& c : registry()) names.push_back(c.name);
  return names;
}

FieldState init_state(const CaseSpec& c, const Mesh& m, const GasParams& g) {
  FieldState s = make_state(m);
  const int gx = m.gx(), gy = m.gy();
  for (int j = gy; j < gy + m.ny; ++j) {
    for (int i = gx; i < gx + m.nx; ++i) {
      s(i, j) = primitive_to_conserved(c.initial(m.center_x(i), m.center_y(j)), g);
    }
  }
  return s;
}

}  // namespace htcmhd
