#pragma once

#include <map>
#include <optional>
#include <string>

namespace htcmhd {

/// Run configuration as accepted on the command line or from a
/// key/value config file. Unset optionals resolve to case defaults.
struct RunConfig {
  std::string case_name = "vortex";
  std::optional<int> nx;
  std::optional<int> ny;
  std::optional<double> gamma;
  double c_v = 1.0;
  double cfl = 0.5;
  std::optional<double> c_h;
  std::optional<std::string> eps;  // "limiter" or a number
  int n_gp = 3;
  std::optional<double> t_end;
  std::optional<double> fixed_dt;
  long max_steps = 10'000'000;
  std::string out_dir = "out";
  int snapshot_every = 0;  // 0: initial and final only
  int series_every = 1;
  unsigned long seed = 0;  // consumed by randomized harnesses only
};

/// Parse `key = value` lines ('#' starts a comment). Keys mirror the
/// manifest written by a run, so a manifest can be replayed directly.
RunConfig parse_config_file(const std::string& path);

void apply_key_value(RunConfig& cfg, const std::string& key, const std::string& value);

/// Every field, resolved, in a fixed order. This is the manifest body.
std::map<std::string, std::string> to_key_values(const RunConfig& cfg);

}  // namespace htcmhd
