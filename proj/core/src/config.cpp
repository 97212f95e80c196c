#include "pdimer/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pdimer/error.hpp"

namespace pdimer {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::ConfigError, path + ": " + what);
}

void require_object(const json& j, const std::string& path, std::initializer_list<const char*> keys) {
  if (!j.is_object()) fail(path.empty() ? "<root>" : path, "expected an object");
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [key, _] : j.items()) {
    if (!allowed.count(key)) fail(path.empty() ? key : path + "." + key, "unknown key");
  }
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

int integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

void read_number(const json& obj, const char* key, const std::string& path, double& out) {
  if (auto it = obj.find(key); it != obj.end()) out = number(*it, path.empty() ? key : path + "." + key);
}

std::optional<double> optional_number(const json& j, const std::string& path) {
  if (j.is_null()) return std::nullopt;
  return number(j, path);
}

SweepAxis parse_axis(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  const auto s = j.get<std::string>();
  for (auto a : {SweepAxis::None, SweepAxis::LaserAmplitude, SweepAxis::MolecularDetuning, SweepAxis::CPlus}) {
    if (to_string(a) == s) return a;
  }
  fail(path, "unknown sweep axis '" + s + "'");
}

}  // namespace

ScenarioConfig apply_config_json(ScenarioConfig cfg, std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail("<document>", e.what());
  }
  require_object(root, "",
                 {"name", "description", "waveguide", "separation", "initial", "drive", "coupling_override",
                  "collective_decay_override", "time", "sweep", "dt"});

  if (auto it = root.find("name"); it != root.end()) {
    if (!it->is_string()) fail("name", "expected a string");
    cfg.name = it->get<std::string>();
  }
  if (auto it = root.find("description"); it != root.end()) {
    if (!it->is_string()) fail("description", "expected a string");
    cfg.description = it->get<std::string>();
  }
  if (auto it = root.find("waveguide"); it != root.end()) {
    require_object(*it, "waveguide", {"decay_rate", "beta", "plasmon_wavelength", "propagation_length"});
    read_number(*it, "decay_rate", "waveguide", cfg.waveguide.decay_rate);
    read_number(*it, "beta", "waveguide", cfg.waveguide.beta);
    read_number(*it, "plasmon_wavelength", "waveguide", cfg.waveguide.plasmon_wavelength);
    read_number(*it, "propagation_length", "waveguide", cfg.waveguide.propagation_length);
  }
  read_number(root, "separation", "", cfg.separation);
  if (auto it = root.find("initial"); it != root.end()) {
    if (it->is_string()) {
      const auto s = it->get<std::string>();
      const auto named = parse_named_state(s);
      if (!named) fail("initial", "unknown named state '" + s + "'");
      cfg.initial.spec = *named;
    } else {
      require_object(*it, "initial", {"a3", "b3", "eta", "h3"});
      XStateParams x;
      read_number(*it, "a3", "initial", x.a3);
      read_number(*it, "b3", "initial", x.b3);
      read_number(*it, "eta", "initial", x.eta);
      read_number(*it, "h3", "initial", x.h3);
      cfg.initial.spec = x;
    }
  }
  if (auto it = root.find("drive"); it != root.end()) {
    require_object(*it, "drive", {"amplitude_1", "amplitude_2", "laser_detuning", "molecular_detuning", "switch_off"});
    read_number(*it, "amplitude_1", "drive", cfg.drive.amplitude_1);
    read_number(*it, "amplitude_2", "drive", cfg.drive.amplitude_2);
    read_number(*it, "molecular_detuning", "drive", cfg.drive.molecular_detuning);
    if (auto d = it->find("laser_detuning"); d != it->end()) {
      if (d->is_string()) {
        if (d->get<std::string>() != "dressed") fail("drive.laser_detuning", "expected a number or \"dressed\"");
        cfg.detuning_mode = LaserDetuningMode::DressedResonance;
      } else {
        cfg.drive.laser_detuning = number(*d, "drive.laser_detuning");
        cfg.detuning_mode = LaserDetuningMode::Fixed;
      }
    }
    if (auto s = it->find("switch_off"); s != it->end()) cfg.drive.switch_off = optional_number(*s, "drive.switch_off");
  }
  if (auto it = root.find("coupling_override"); it != root.end()) {
    cfg.coupling_override = optional_number(*it, "coupling_override");
  }
  if (auto it = root.find("collective_decay_override"); it != root.end()) {
    cfg.collective_decay_override = optional_number(*it, "collective_decay_override");
  }
  if (auto it = root.find("time"); it != root.end()) {
    require_object(*it, "time", {"t_max", "samples"});
    read_number(*it, "t_max", "time", cfg.t_max);
    if (auto s = it->find("samples"); s != it->end()) cfg.samples = integer(*s, "time.samples");
  }
  if (auto it = root.find("sweep"); it != root.end()) {
    require_object(*it, "sweep", {"axis", "min", "max", "points"});
    if (auto a = it->find("axis"); a != it->end()) cfg.sweep.axis = parse_axis(*a, "sweep.axis");
    read_number(*it, "min", "sweep", cfg.sweep.min);
    read_number(*it, "max", "sweep", cfg.sweep.max);
    if (auto p = it->find("points"); p != it->end()) cfg.sweep.points = integer(*p, "sweep.points");
  }
  read_number(root, "dt", "", cfg.dt);

  cfg.validate();
  return cfg;
}

ScenarioConfig load_config_file(const std::filesystem::path& path, ScenarioConfig base) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot read config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::IoError, "error while reading " + path.string());
  return apply_config_json(std::move(base), buffer.str());
}

}  // namespace pdimer
