#include "htcmhd/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace htcmhd {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

void apply_key_value(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "case") cfg.case_name = value;
  else if (key == "nx") cfg.nx = std::stoi(value);
  else if (key == "ny") cfg.ny = std::stoi(value);
  else if (key == "gamma") cfg.gamma = std::stod(value);
  else if (key == "cv") cfg.c_v = std::stod(value);
  else if (key == "cfl") cfg.cfl = std::stod(value);
  else if (key == "ch") cfg.c_h = std::stod(value);
  else if (key == "eps") cfg.eps = value;
  else if (key == "ngp") cfg.n_gp = std::stoi(value);
  else if (key == "tend") cfg.t_end = std::stod(value);
  else if (key == "dt") cfg.fixed_dt = std::stod(value);
  else if (key == "max_steps") cfg.max_steps = std::stol(value);
  else if (key == "out") cfg.out_dir = value;
  else if (key == "snap_every") cfg.snapshot_every = std::stoi(value);
  else if (key == "series_every") cfg.series_every = std::stoi(value);
  else if (key == "seed") cfg.seed = std::stoul(value);
  else throw std::invalid_argument("unknown config key '" + key + "'");
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected 'key = value'");
    apply_key_value(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

std::map<std::string, std::string> to_key_values(const RunConfig& cfg) {
  std::map<std::string, std::string> kv;
  kv["case"] = cfg.case_name;
  if (cfg.nx) kv["nx"] = std::to_string(*cfg.nx);
  if (cfg.ny) kv["ny"] = std::to_string(*cfg.ny);
  if (cfg.gamma) kv["gamma"] = fmt(*cfg.gamma);
  kv["cv"] = fmt(cfg.c_v);
  kv["cfl"] = fmt(cfg.cfl);
  if (cfg.c_h) kv["ch"] = fmt(*cfg.c_h);
  if (cfg.eps) kv["eps"] = *cfg.eps;
  kv["ngp"] = std::to_string(cfg.n_gp);
  if (cfg.t_end) kv["tend"] = fmt(*cfg.t_end);
  if (cfg.fixed_dt) kv["dt"] = fmt(*cfg.fixed_dt);
  kv["max_steps"] = std::to_string(cfg.max_steps);
  kv["out"] = cfg.out_dir;
  kv["snap_every"] = std::to_string(cfg.snapshot_every);
  kv["series_every"] = std::to_string(cfg.series_every);
  kv["seed"] = std::to_string(cfg.seed);
  return kv;
}

}  // namespace htcmhd
