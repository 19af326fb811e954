#pragma once

#include <map>
#include <string>
#include <vector>

#include "htcmhd/grid.hpp"
#include "htcmhd/thermo.hpp"

namespace htcmhd {

/// One row of the diagnostics time series.
struct SampleRow {
  double t = 0.0;
  double mass = 0.0;
  double energy = 0.0;
  double entropy = 0.0;
  double divb = 0.0;
  double dt = 0.0;
};

/// Snapshot column contract (after x, y):
///   rho, m1, m2, m3, sigma, B1, B2, B3, phi, p, v1, v2, v3, S, E
/// Values are written with 17 significant digits, so read_snapshot
/// reproduces the conserved fields bitwise.
void write_snapshot(const std::string& path, const FieldState& s, const Mesh& m,
                    const GasParams& g);

struct SnapshotData {
  int nx = 0, ny = 0;
  double time = 0.0;
  std::vector<Conserved> cells;  // interior, row-major
};

SnapshotData read_snapshot(const std::string& path);

/// Appends rows and flushes after every one, so an aborted run keeps
/// its series up to the last completed step.
class SeriesWriter {
 public:
  explicit SeriesWriter(const std::string& path);
  void append(const SampleRow& row);

 private:
  std::string path_;
  bool header_written_ = false;
};

void write_manifest(const std::string& path,
                    const std::map<std::string, std::string>& kv);

}  // namespace htcmhd
