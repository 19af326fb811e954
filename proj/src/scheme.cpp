#include "htcmhd/scheme.hpp"

#include <algorithm>
#include <cmath>

namespace htcmhd {

namespace {

struct SideView {
  double rho, S, p, phi, e4s;  // e4s = specific cleaning energy 1/2 phi^2
  Vec3 v, B;
};

SideView side_view(const Conserved& q, const GasParams& g) {
  SideView s;
  s.rho = q.rho();
  s.S = q.specific_entropy();
  s.v = q.velocity();
  s.B = q.magnetic();
  s.phi = q.phi();
  s.p = pressure(q, g);
  s.e4s = 0.5 * s.phi * s.phi;
  return s;
}

double frobenius_norm(const Mat9& m) {
  double s = 0.0;
  for (const auto& row : m)
    for (double x : row) s += x * x;
  return std::sqrt(s);
}

}  // namespace

FaceAssembly face_assemble(const Conserved& ql, const Conserved& qr,
                           const FaceGeom& geom, double eps, const SchemeParams& p) {
  const Vec3& n = geom.normal;
  const SideView l = side_view(ql, p.gas);
  const SideView r = side_view(qr, p.gas);

  FaceAssembly out;
  FaceContribution& fc = out.face;
  fc.eps = eps;
  fc.euler_flux = euler_ec_flux(ql, qr, n, p.quad, p.gas);
  fc.stress = magnetic_stress_flux(l.B, r.B);
  fc.mag_pressure = magnetic_pressure_flux(l.B, r.B);
  fc.products = b_face_products(ql, qr);
  fc.u_glm = glm_advection_speed(ql, qr, fc.euler_flux[irho], n);
  const PhiFlux pf = glm_phi_flux(ql, qr);
  fc.phi_face = pf.phi_face;
  fc.rho_face = pf.rho_face;
  fc.g = dissipative_flux(ql, qr, eps, geom.delta);

  const Conserved dq = qr - ql;
  if (eps > 0.0) {
    fc.roe_h = roe_hessian(ql, qr, p.quad, p.gas);
    fc.have_roe_h = true;
    const double qf = quadratic_form(fc.roe_h, dq, dq);
    const double Tl = temperature(ql, p.gas);
    const double Tr = temperature(qr, p.gas);
    fc.prod_left = 0.5 * eps * qf / (Tl * geom.delta);
    fc.prod_right = 0.5 * eps * qf / (Tr * geom.delta);
  }

  const double dBn = dot(r.B - l.B, n);
  const double dphi = r.phi - l.phi;
  const double ch = p.c_h;

  // per-side inviscid fluctuations; the l side sees them with its own
  // normal, the r side with the flipped one (already folded in below)
  auto fluctuation = [&](const SideView& me, const Conserved& qme, double sgn) {
    // sgn = +1 for the l cell, -1 for the r cell
    Conserved d;
    const Conserved f_me = physical_flux_euler(qme, n, p.gas);
    for (int i = irho; i <= isig; ++i) d[i] = sgn * (fc.euler_flux[i] - f_me[i]);

    const double mu_me = 0.5 * dot(me.B, me.B);
    for (int i = 0; i < 3; ++i) {
      double stress_jump = 0.0;
      for (int k = 0; k < 3; ++k)
        stress_jump += (fc.stress[i][k] - (-me.B[i] * me.B[k])) * n[k];
      d[imom + i] += sgn * (stress_jump + (fc.mag_pressure - mu_me) * n[i]);
    }
    for (int i = 0; i < 3; ++i) {
      double bv_jump = 0.0, vb_jump = 0.0;
      for (int k = 0; k < 3; ++k) {
        bv_jump += (fc.products.bv[i][k] - me.B[i] * me.v[k]) * n[k];
        vb_jump += (fc.products.vb[i][k] - me.v[i] * me.B[k]) * n[k];
      }
      d[imag + i] = sgn * (bv_jump - vb_jump) + 0.5 * fc.products.v_face[i] * dBn +
                    sgn * ch * (fc.phi_face - me.phi) * n[i];
    }
    d[iphi] = 0.5 * fc.u_glm * dphi + 0.5 * (ch / fc.rho_face) * dBn;
    return d;
  };

  const Conserved dl = fluctuation(l, ql, +1.0);
  const Conserved dr = fluctuation(r, qr, -1.0);

  out.to_left = (-1.0 * dl) + fc.g;
  out.to_left[isig] += fc.prod_left;
  out.to_right = (-1.0 * dr) + (-1.0 * fc.g);
  out.to_right[isig] += fc.prod_right;
  return out;
}

double energy_flux_normal(const Conserved& q, const Vec3& n, double c_h,
                          const GasParams& g) {
  const EnergyParts e = energy(q, g);
  const Vec3 v = q.velocity();
  const Vec3 B = q.magnetic();
  const double vn = dot(v, n);
  const double p = pressure(q, g);
  const double mu = 0.5 * dot(B, B);
  double vRn = 0.0;  // v_i R_ik n_k with R_ik = -B_i B_k
  vRn = -dot(v, B) * dot(B, n);
  return vn * (e.e1 + e.e2 + p) + vn * e.e3 + vn * e.e4 + vRn + vn * mu +
         c_h * q.phi() * dot(B, n);
}

EnergyFluctuation energy_fluctuation(const Conserved& ql, const Conserved& qr,
                                     const FaceGeom& geom, const FaceContribution& face,
                                     const SchemeParams& p) {
  const Vec3& n = geom.normal;
  const SideView l = side_view(ql, p.gas);
  const SideView r = side_view(qr, p.gas);
  const Dual pl = dual(ql, p.gas);
  const Dual pr = dual(qr, p.gas);

  const double dBn = dot(r.B - l.B, n);
  const double dphi = r.phi - l.phi;
  const double ch = p.c_h;

  auto dot_fluct = [&](const SideView& me, const Conserved& qme, const Dual& pme,
                       double sgn) {
    const Conserved f_me = physical_flux_euler(qme, n, p.gas);
    double de = 0.0;
    for (int i = irho; i <= isig; ++i) de += pme[i] * sgn * (face.euler_flux[i] - f_me[i]);
    const double mu_me = 0.5 * dot(me.B, me.B);
    for (int i = 0; i < 3; ++i) {
      double stress_jump = 0.0;
      for (int k = 0; k < 3; ++k)
        stress_jump += (face.stress[i][k] - (-me.B[i] * me.B[k])) * n[k];
      de += me.v[i] * sgn * (stress_jump + (face.mag_pressure - mu_me) * n[i]);
    }
    for (int i = 0; i < 3; ++i) {
      double bv_jump = 0.0, vb_jump = 0.0;
      for (int k = 0; k < 3; ++k) {
        bv_jump += (face.products.bv[i][k] - me.B[i] * me.v[k]) * n[k];
        vb_jump += (face.products.vb[i][k] - me.v[i] * me.B[k]) * n[k];
      }
      de += me.B[i] * (sgn * (bv_jump - vb_jump) + 0.5 * face.products.v_face[i] * dBn +
                       sgn * ch * (face.phi_face - me.phi) * n[i]);
    }
    de += pme.psi() * (0.5 * face.u_glm * dphi + 0.5 * (ch / face.rho_face) * dBn);
    return de;
  };

  EnergyFluctuation ef;
  ef.d_left = dot_fluct(l, ql, pl, +1.0);
  ef.d_right = dot_fluct(r, qr, pr, -1.0);
  ef.flux_left = energy_flux_normal(ql, n, ch, p.gas);
  ef.flux_right = energy_flux_normal(qr, n, ch, p.gas);
  return ef;
}

namespace {

// per-face record: brackets for both adjacent cells
struct FaceRecord {
  Conserved to_left;
  Conserved to_right;
};

}  // namespace

RhsOutput rhs(FieldState& s, const Mesh& m, const BoundaryCondition& bc,
              const SchemeParams& p) {
  fill_ghosts(s, m, bc);
  const int gx = m.gx(), gy = m.gy();
  for (int j = gy; j < gy + m.ny; ++j) {
    for (int i = gx; i < gx + m.nx; ++i) {
      if (!admissible(s(i, j)))
        throw admissibility_error(i - gx, j - gy, s.time,
                                  "rho=" + std::to_string(s(i, j).rho()));
    }
  }

  RhsOutput out;
  out.dqdt.assign(static_cast<size_t>(m.nx) * m.ny, Conserved{});
  double min_prod = std::numeric_limits<double>::infinity();

  const int n_axes = m.dim;
  std::vector<FaceRecord> xfaces(static_cast<size_t>(m.nx + 1) * m.ny);
  std::vector<FaceRecord> yfaces;
  if (n_axes == 2) yfaces.assign(static_cast<size_t>(m.nx) * (m.ny + 1), FaceRecord{});

  for (int axis = 0; axis < n_axes; ++axis) {
    FaceGeom geom;
    geom.normal = axis == 0 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
    geom.delta = m.face_delta(axis);
    const int di = axis == 0 ? 1 : 0;
    const int dj = axis == 0 ? 0 : 1;
    const int nfaces_main = (axis == 0 ? m.nx : m.ny) + 1;
    const int n_cross = axis == 0 ? m.ny : m.nx;

    for (int c = 0; c < n_cross; ++c) {
      for (int f = 0; f < nfaces_main; ++f) {
        // cells straddling the face, raw indices
        const int il = (axis == 0 ? gx + f - 1 : gx + c);
        const int jl = (axis == 0 ? gy + c : gy + f - 1);
        const int ir = il + di, jr = jl + dj;
        const Conserved& ql = s(il, jl);
        const Conserved& qr = s(ir, jr);

        double eps;
        if (p.viscosity.kind == ViscosityModel::Kind::constant) {
          eps = p.viscosity.value;
        } else {
          const std::array<double, 4> stencil = {
              s(il - di, jl - dj).rho(), ql.rho(), qr.rho(), s(ir + di, jr + dj).rho()};
          const double smax = max_signal_speed(ql, qr, geom.normal, p.c_h, p.gas);
          eps = viscosity_coefficient(stencil, smax, geom.delta, p.viscosity);
        }

        const FaceAssembly fa = face_assemble(ql, qr, geom, eps, p);
        if (fa.face.have_roe_h) {
          const Conserved dq = qr - ql;
          double ndq2 = 0.0;
          for (int k = 0; k < nvar; ++k) ndq2 += dq[k] * dq[k];
          if (ndq2 > 0.0) {
            const double qf = quadratic_form(fa.face.roe_h, dq, dq);
            min_prod = std::min(min_prod, qf / (ndq2 * frobenius_norm(fa.face.roe_h)));
          }
        }
        const size_t fid = axis == 0 ? static_cast<size_t>(c) * (m.nx + 1) + f
                                     : static_cast<size_t>(f) * m.nx + c;
        (axis == 0 ? xfaces : yfaces)[fid] = {fa.to_left, fa.to_right};
      }
    }
  }

  // reduce per cell in index order: W, E, then S, N
  const double wx = m.face_area(0) / m.volume();
  const double wy = n_axes == 2 ? m.face_area(1) / m.volume() : 0.0;
  for (int j = 0; j < m.ny; ++j) {
    for (int i = 0; i < m.nx; ++i) {
      Conserved acc;
      acc += wx * xfaces[static_cast<size_t>(j) * (m.nx + 1) + i].to_right;
      acc += wx * xfaces[static_cast<size_t>(j) * (m.nx + 1) + i + 1].to_left;
      if (n_axes == 2) {
        acc += wy * yfaces[static_cast<size_t>(j) * m.nx + i].to_right;
        acc += wy * yfaces[static_cast<size_t>(j + 1) * m.nx + i].to_left;
      }
      out.dqdt[static_cast<size_t>(j) * m.nx + i] = acc;
    }
  }
  out.min_production_rel = min_prod;
  return out;
}

}  // namespace htcmhd
