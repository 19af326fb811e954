#include "htcmhd/grid.hpp"

#include <stdexcept>
#include <string>

namespace htcmhd {

Mesh build_mesh(int dim, int nx, int ny, double x_min, double x_max, double y_min,
                double y_max) {
  if (dim != 1 && dim != 2) throw std::invalid_argument("build_mesh: dim must be 1 or 2");
  if (nx <= 0) throw std::invalid_argument("build_mesh: nx must be positive");
  if (!(x_max > x_min)) throw std::invalid_argument("build_mesh: empty x extent");
  Mesh m;
  m.dim = dim;
  m.nx = nx;
  m.x_min = x_min;
  m.x_max = x_max;
  m.dx = (x_max - x_min) / nx;
  if (dim == 2) {
    if (ny <= 0) throw std::invalid_argument("build_mesh: ny must be positive");
    if (!(y_max > y_min)) throw std::invalid_argument("build_mesh: empty y extent");
    m.ny = ny;
    m.y_min = y_min;
    m.y_max = y_max;
    m.dy = (y_max - y_min) / ny;
  } else {
    m.ny = 1;
    m.y_min = 0.0;
    m.y_max = 1.0;
    m.dy = 1.0;
  }
  return m;
}

FieldState make_state(const Mesh& m) {
  FieldState s;
  s.total_x = m.total_x();
  s.total_y = m.total_y();
  s.data.assign(m.cell_count(), Conserved{});
  return s;
}

namespace {

int mirror_index(int i, int lo, int n, BcKind lo_kind, BcKind hi_kind) {
  // source interior index for a ghost at raw index i; interior spans
  // [lo, lo + n)
  if (i < lo) {
    return lo_kind == BcKind::periodic ? i + n : lo;
  }
  if (i >= lo + n) {
    return hi_kind == BcKind::periodic ? i - n : lo + n - 1;
  }
  return i;
}

}  // namespace

void fill_ghosts(FieldState& s, const Mesh& m, const BoundaryCondition& bc) {
  const int gx = m.gx(), gy = m.gy();
  if ((bc.x_lo == BcKind::periodic) != (bc.x_hi == BcKind::periodic))
    throw std::invalid_argument("fill_ghosts: unmatched periodic x sides");
  if (m.dim == 2 && (bc.y_lo == BcKind::periodic) != (bc.y_hi == BcKind::periodic))
    throw std::invalid_argument("fill_ghosts: unmatched periodic y sides");

  // x ghosts for interior rows
  for (int j = gy; j < gy + m.ny; ++j) {
    for (int i = 0; i < gx; ++i) {
      s(i, j) = s(mirror_index(i, gx, m.nx, bc.x_lo, bc.x_hi), j);
      s(gx + m.nx + i, j) = s(mirror_index(gx + m.nx + i, gx, m.nx, bc.x_lo, bc.x_hi), j);
    }
  }
  if (m.dim == 1) return;
  // y ghosts for every column (covers corners)
  for (int i = 0; i < m.total_x(); ++i) {
    for (int j = 0; j < gy; ++j) {
      s(i, j) = s(i, mirror_index(j, gy, m.ny, bc.y_lo, bc.y_hi));
      s(i, gy + m.ny + j) = s(i, mirror_index(gy + m.ny + j, gy, m.ny, bc.y_lo, bc.y_hi));
    }
  }
}

}  // namespace htcmhd
