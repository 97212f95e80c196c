#pragma once

// Named experiments: a scenario fixes the waveguide, the emitter separation,
// the initial state, the drive and a time grid, optionally swept along one
// axis. Running it yields one correlation time series per sweep point.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pdimer/correlations.hpp"
#include "pdimer/dynamics.hpp"
#include "pdimer/states.hpp"

namespace pdimer {

enum class SweepAxis { None, LaserAmplitude, MolecularDetuning, CPlus };

std::string_view to_string(SweepAxis axis);
/// CSV column name of the swept quantity ("l1", "delta", "c_plus").
std::string_view sweep_column(SweepAxis axis);

struct SweepSpec {
  SweepAxis axis = SweepAxis::None;
  double min = 0.0;
  double max = 0.0;
  int points = 1;

  /// Evenly spaced values including both ends; a single NaN-free 0 for None.
  std::vector<double> values() const;
};

enum class NamedState { Ground, Classical, MaximallyMixed, PsiPlus, PsiMinus, PhiPlus, PhiMinus };

std::string_view to_string(NamedState s);
std::optional<NamedState> parse_named_state(std::string_view name);

struct InitialState {
  std::variant<NamedState, XStateParams> spec = NamedState::Ground;

  DensityMatrix4 build() const;
  /// X-state parameters when the state belongs to the X family.
  std::optional<XStateParams> x_params() const;
};

enum class LaserDetuningMode {
  Fixed,             // drive.laser_detuning as given
  DressedResonance,  // Delta = sqrt(V^2 + (delta/2)^2) at every sweep point
};

struct ScenarioConfig {
  std::string name;
  std::string description;
  WaveguideParams waveguide;
  double separation = 1.0;  // zeta
  InitialState initial;
  DriveConfig drive;
  LaserDetuningMode detuning_mode = LaserDetuningMode::Fixed;
  std::optional<double> coupling_override;          // force V (e.g. 0 for non-interacting control)
  std::optional<double> collective_decay_override;  // force gamma
  double t_max = 20.0;
  int samples = 401;
  SweepSpec sweep;
  double dt = 1e-3;
  bool verify = false;
  bool raw_elements = false;

  /// Throws ConfigError with the offending field path.
  void validate() const;
};

enum class SolutionMethod { Resonant, GammaZero, Detuned, Integrator };
std::string_view to_string(SolutionMethod m);

/// Fully resolved inputs of one grid point.
struct PointSetup {
  double sweep_value = 0.0;
  DensityMatrix4 initial_state = ground_state();
  std::optional<XStateParams> x_params;
  CollectiveParams collective;
  DriveConfig drive;
};

PointSetup resolve_point(const ScenarioConfig& cfg, double sweep_value);

/// Closed form when its family preconditions hold exactly, integrator otherwise.
SolutionMethod choose_method(const PointSetup& point);

/// Density matrices at the scenario's sample times for one grid point.
std::vector<DensityMatrix4> point_states(const ScenarioConfig& cfg, const PointSetup& point, SolutionMethod method);

struct TrajectoryRecord {
  double t = 0.0;
  CorrelationReport report;
  BellPopulations bell;
  std::optional<Matrix4> raw;
};

struct ScenarioBlock {
  double sweep_value = 0.0;
  SolutionMethod method = SolutionMethod::Integrator;
  std::vector<TrajectoryRecord> records;
};

struct ScenarioResult {
  std::string name;
  SweepAxis axis = SweepAxis::None;
  bool raw_elements = false;
  std::vector<ScenarioBlock> blocks;  // in sweep order

  std::size_t row_count() const;
};

struct RunOptions {
  std::size_t workers = 0;  // 0: PLASMON_DIMER_THREADS or hardware concurrency
  OptimizerOptions optimizer;
};

/// Deterministic for a fixed config. Physics errors are rethrown with the
/// scenario name and sweep value prepended.
ScenarioResult run_scenario(const ScenarioConfig& cfg, const RunOptions& opts = {});

/// fig1a, fig1b, fig2a, fig2b, fig3, fig3-noninteracting, fig4.
const std::vector<ScenarioConfig>& scenario_catalog();
std::optional<ScenarioConfig> find_scenario(std::string_view name);

}  // namespace pdimer
