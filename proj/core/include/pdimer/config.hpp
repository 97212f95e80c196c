#pragma once

// JSON scenario documents. Every key is optional and overlays the base
// configuration; unknown keys are rejected.
//
//   {
//     "name": "my-run",
//     "waveguide": {"decay_rate": 1, "beta": 0.94, "plasmon_wavelength": 542, "propagation_length": 2000},
//     "separation": 0.75,
//     "initial": "ground" | {"a3": 0, "b3": 0, "eta": 0, "h3": 0},
//     "drive": {"amplitude_1": 1.5, "amplitude_2": 0, "laser_detuning": 0 | "dressed",
//               "molecular_detuning": 0, "switch_off": 10 | null},
//     "coupling_override": 0, "collective_decay_override": 0,
//     "time": {"t_max": 20, "samples": 2001},
//     "sweep": {"axis": "none" | "laser_amplitude" | "molecular_detuning" | "c_plus",
//               "min": 0.4, "max": 3.6, "points": 33},
//     "dt": 0.001
//   }

#include <filesystem>
#include <string_view>

#include "pdimer/scenarios.hpp"

namespace pdimer {

/// Throws ConfigError naming the offending field path.
ScenarioConfig apply_config_json(ScenarioConfig base, std::string_view json_text);

/// Throws IoError when the file cannot be read, ConfigError for bad content.
ScenarioConfig load_config_file(const std::filesystem::path& path, ScenarioConfig base);

}  // namespace pdimer
