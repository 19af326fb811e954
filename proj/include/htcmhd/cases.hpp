#pragma once

#include <functional>
#include <string>
#include <vector>

#include "htcmhd/grid.hpp"
#include "htcmhd/numflux.hpp"
#include "htcmhd/types.hpp"

namespace htcmhd {

/// A benchmark setup: domain, defaults and initial data. The exact
/// solution is available for the vortex only.
struct CaseSpec {
  std::string name;
  int dim = 2;
  double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
  int default_nx = 0, default_ny = 0;
  double gamma = 5.0 / 3.0;
  ViscosityModel viscosity;
  double c_h = 2.0;
  BoundaryCondition bc;
  double t_end = 0.0;
  std::function<Primitive(double, double)> initial;
  std::function<Primitive(double, double, double)> exact;  // empty if none
};

// initial data of the individual benchmarks
Primitive vortex(double x, double y);
Primitive vortex_exact(double x, double y, double t);
Primitive riemann(int case_id, double x);
Primitive orszag_tang(double x, double y);
Primitive rotor(double x, double y);
Primitive blast(double x, double y);

/// Registry addressable by name: vortex, rp1..rp4, orszag_tang, rotor, blast.
const CaseSpec& find_case(const std::string& name);
std::vector<std::string> case_names();

/// Sample a case's initial data at cell centers.
FieldState init_state(const CaseSpec& c, const Mesh& m, const GasParams& g);

}  // namespace htcmhd
