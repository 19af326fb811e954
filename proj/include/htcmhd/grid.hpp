#pragma once

#include <stdexcept>
#include <vector>

#include "htcmhd/types.hpp"

namespace htcmhd {

enum class BcKind { periodic, transmissive };

/// Boundary kind per side; periodic sides must come in matching pairs.
struct BoundaryCondition {
  BcKind x_lo = BcKind::periodic;
  BcKind x_hi = BcKind::periodic;
  BcKind y_lo = BcKind::periodic;
  BcKind y_hi = BcKind::periodic;
};

inline BoundaryCondition periodic_bc() { return {}; }
inline BoundaryCondition transmissive_bc() {
  return {BcKind::transmissive, BcKind::transmissive, BcKind::transmissive,
          BcKind::transmissive};
}

/// Uniform Cartesian mesh, 1D or 2D. Two ghost layers in every swept
/// direction (the limiter stencil reaches the neighbour of a neighbour).
struct Mesh {
  static constexpr int ghost = 2;

  int dim = 2;
  int nx = 0, ny = 0;  // interior cell counts (ny == 1 in 1D)
  double x_min = 0.0, x_max = 1.0;
  double y_min = 0.0, y_max = 1.0;
  double dx = 0.0, dy = 0.0;

  int gx() const { return ghost; }
  int gy() const { return dim == 2 ? ghost : 0; }
  int total_x() const { return nx + 2 * gx(); }
  int total_y() const { return ny + 2 * gy(); }
  int cell_count() const { return total_x() * total_y(); }
  int index(int i, int j) const { return j * total_x() + i; }

  // centers by raw (ghost-inclusive) index
  double center_x(int i) const { return x_min + (i - gx() + 0.5) * dx; }
  double center_y(int j) const {
    return dim == 2 ? y_min + (j - gy() + 0.5) * dy : 0.0;
  }

  double volume() const { return dim == 2 ? dx * dy : dx; }
  double face_area(int axis) const {
    if (dim == 1) return 1.0;
    return axis == 0 ? dy : dx;
  }
  double face_delta(int axis) const { return axis == 0 ? dx : dy; }
};

Mesh build_mesh(int dim, int nx, int ny, double x_min, double x_max, double y_min,
                double y_max);

/// Cell-averaged conserved values over a mesh, ghosts included.
struct FieldState {
  int total_x = 0, total_y = 0;
  double time = 0.0;
  std::vector<Conserved> data;

  Conserved& operator()(int i, int j) { return data[j * total_x + i]; }
  const Conserved& operator()(int i, int j) const { return data[j * total_x + i]; }
};

FieldState make_state(const Mesh& m);

/// Populate both ghost layers: periodic wrap or zero-gradient copy.
/// The x sweep runs over interior rows first, then the y sweep covers
/// every column, so 2D corner ghosts end up defined; for periodic
/// boundaries the result is independent of the sweep order.
void fill_ghosts(FieldState& s, const Mesh& m, const BoundaryCondition& bc);

}  // namespace htcmhd
