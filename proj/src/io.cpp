#include "htcmhd/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace htcmhd {

namespace {

void put(std::FILE* f, double v, char sep) { std::fprintf(f, "%.17g%c", v, sep); }

}  // namespace

void write_snapshot(const std::string& path, const FieldState& s, const Mesh& m,
                    const GasParams& g) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  std::fprintf(f, "# snapshot\n");
  std::fprintf(f, "# time = %.17g\n", s.time);
  std::fprintf(f, "# dim = %d nx = %d ny = %d\n", m.dim, m.nx, m.ny);
  std::fprintf(f, "# x = [%.17g, %.17g] y = [%.17g, %.17g]\n", m.x_min, m.x_max,
               m.y_min, m.y_max);
  std::fprintf(f, "x,y,rho,m1,m2,m3,sigma,B1,B2,B3,phi,p,v1,v2,v3,S,E\n");
  const int gx = m.gx(), gy = m.gy();
  for (int j = gy; j < gy + m.ny; ++j) {
    for (int i = gx; i < gx + m.nx; ++i) {
      const Conserved& q = s(i, j);
      put(f, m.center_x(i), ',');
      put(f, m.center_y(j), ',');
      for (int k = 0; k < nvar; ++k) put(f, q[k], ',');
      put(f, pressure(q, g), ',');
      const Vec3 v = q.velocity();
      for (int k = 0; k < 3; ++k) put(f, v[k], ',');
      put(f, q.specific_entropy(), ',');
      put(f, energy(q, g).total(), '\n');
    }
  }
  std::fclose(f);
}

SnapshotData read_snapshot(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open snapshot '" + path + "'");
  SnapshotData snap;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# time", 0) == 0) {
      std::sscanf(line.c_str(), "# time = %lg", &snap.time);
    } else if (line.rfind("# dim", 0) == 0) {
      int dim = 0;
      std::sscanf(line.c_str(), "# dim = %d nx = %d ny = %d", &dim, &snap.nx, &snap.ny);
    } else if (!line.empty() && line[0] != '#' && line[0] != 'x') {
      std::istringstream row(line);
      std::string tok;
      Conserved q;
      int col = 0;
      while (std::getline(row, tok, ',') && col < 2 + nvar) {
        if (col >= 2) q[col - 2] = std::strtod(tok.c_str(), nullptr);
        ++col;
      }
      snap.cells.push_back(q);
    }
  }
  if (static_cast<int>(snap.cells.size()) != snap.nx * snap.ny)
    throw std::runtime_error("snapshot '" + path + "': cell count mismatch");
  return snap;
}

SeriesWriter::SeriesWriter(const std::string& path) : path_(path) {
  std::ofstream out(path_, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open series '" + path_ + "'");
}

void SeriesWriter::append(const SampleRow& row) {
  std::ofstream out(path_, std::ios::app);
  if (!header_written_) {
    out << "t,mass,energy,entropy,divb_linf,dt\n";
    header_written_ = true;
  }
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", row.t,
                row.mass, row.energy, row.entropy, row.divb, row.dt);
  out << buf;
  out.flush();
}

void write_manifest(const std::string& path,
                    const std::map<std::string, std::string>& kv) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open manifest '" + path + "'");
  for (const auto& [k, v] : kv) out << k << " = " << v << "\n";
  out.flush();
}

}  // namespace htcmhd
