#include "pdimer/scenarios.hpp"

#include <sstream>

#include "pdimer/analytic.hpp"
#include "pdimer/error.hpp"
#include "pdimer/parallel.hpp"

namespace pdimer {

namespace {

constexpr double kVerifyTolerance = 1e-6;

[[noreturn]] void config_error(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::ConfigError, field + ": " + what);
}

std::string format_number(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::vector<ScenarioConfig> build_catalog() {
  std::vector<ScenarioConfig> out;

  ScenarioConfig fig1a;
  fig1a.name = "fig1a";
  fig1a.description = "classically correlated rho_C, zeta = 1 (V = 0): correlation dynamics";
  fig1a.separation = 1.0;
  fig1a.initial.spec = NamedState::Classical;
  fig1a.t_max = 20.0;
  fig1a.samples = 401;
  out.push_back(fig1a);

  ScenarioConfig fig1b = fig1a;
  fig1b.name = "fig1b";
  fig1b.description = "maximally mixed rho_MM, zeta = 1: correlations and Bell populations";
  fig1b.initial.spec = NamedState::MaximallyMixed;
  out.push_back(fig1b);

  ScenarioConfig fig2a = fig1b;
  fig2a.name = "fig2a";
  fig2a.description = "entropy bound D - C for rho_MM, zeta = 1 (bound_lhs column)";
  out.push_back(fig2a);

  ScenarioConfig fig2b;
  fig2b.name = "fig2b";
  fig2b.description = "Xi family (c_- = 0, eta = 0, h3 = c_+^2/4) swept over c_+, zeta = 3/4";
  fig2b.separation = 0.75;
  fig2b.initial.spec = XStateParams::xi(0.0);
  fig2b.t_max = 20.0;
  fig2b.samples = 201;
  fig2b.sweep = {SweepAxis::CPlus, -1.0, 1.0, 41};
  out.push_back(fig2b);

  ScenarioConfig fig3;
  fig3.name = "fig3";
  fig3.description = "laser on emitter 1 (l2 = 0), ground start, zeta = 3/4, off at t = 10: l x t grid";
  fig3.separation = 0.75;
  fig3.initial.spec = NamedState::Ground;
  fig3.drive.amplitude_1 = 1.5;
  fig3.drive.switch_off = 10.0;
  fig3.t_max = 20.0;
  fig3.samples = 2001;
  fig3.sweep = {SweepAxis::LaserAmplitude, 0.4, 3.6, 33};
  out.push_back(fig3);

  ScenarioConfig control = fig3;
  control.name = "fig3-noninteracting";
  control.description = "fig3 with V forced to 0: correlations stay zero under the laser";
  control.coupling_override = 0.0;
  control.samples = 201;
  out.push_back(control);

  ScenarioConfig fig4 = fig3;
  fig4.name = "fig4";
  fig4.description = "detuned emitters, l = 1.5, Delta = sqrt(V^2 + (delta/2)^2), off at t = 10: delta x t grid";
  fig4.drive.amplitude_1 = 1.5;
  fig4.detuning_mode = LaserDetuningMode::DressedResonance;
  fig4.sweep = {SweepAxis::MolecularDetuning, 0.0, 2.0, 21};
  out.push_back(fig4);

  return out;
}

Error with_context(const Error& e, const ScenarioConfig& cfg, double sweep_value) {
  std::string where = "scenario '" + cfg.name + "'";
  if (cfg.sweep.axis != SweepAxis::None) {
    where += " (" + std::string(sweep_column(cfg.sweep.axis)) + " = " + format_number(sweep_value) + ")";
  }
  return Error(e.kind(), where + ": " + e.detail());
}

}  // namespace

std::string_view to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::None: return "none";
    case SweepAxis::LaserAmplitude: return "laser_amplitude";
    case SweepAxis::MolecularDetuning: return "molecular_detuning";
    case SweepAxis::CPlus: return "c_plus";
  }
  return "none";
}

std::string_view sweep_column(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::LaserAmplitude: return "l1";
    case SweepAxis::MolecularDetuning: return "delta";
    case SweepAxis::CPlus: return "c_plus";
    case SweepAxis::None: break;
  }
  return "";
}

std::vector<double> SweepSpec::values() const {
  if (axis == SweepAxis::None) return {0.0};
  if (points <= 1) return {min};
  std::vector<double> v(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) v[static_cast<std::size_t>(k)] = min + (max - min) * k / (points - 1);
  v.back() = max;
  return v;
}

std::string_view to_string(NamedState s) {
  switch (s) {
    case NamedState::Ground: return "ground";
    case NamedState::Classical: return "rho_c";
    case NamedState::MaximallyMixed: return "rho_mm";
    case NamedState::PsiPlus: return "psi_plus";
    case NamedState::PsiMinus: return "psi_minus";
    case NamedState::PhiPlus: return "phi_plus";
    case NamedState::PhiMinus: return "phi_minus";
  }
  return "ground";
}

std::optional<NamedState> parse_named_state(std::string_view name) {
  for (auto s : {NamedState::Ground, NamedState::Classical, NamedState::MaximallyMixed, NamedState::PsiPlus,
                 NamedState::PsiMinus, NamedState::PhiPlus, NamedState::PhiMinus}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::optional<XStateParams> InitialState::x_params() const {
  if (const auto* x = std::get_if<XStateParams>(&spec)) return *x;
  switch (std::get<NamedState>(spec)) {
    case NamedState::Ground: return XStateParams{1.0, 1.0, 0.0, 1.0};
    case NamedState::Classical: return XStateParams{0.0, 0.0, 0.0, 1.0};
    case NamedState::MaximallyMixed: return XStateParams{0.0, 0.0, 0.0, 0.0};
    case NamedState::PsiPlus: return XStateParams{0.0, 0.0, 1.0, -1.0};
    case NamedState::PsiMinus: return XStateParams{0.0, 0.0, -1.0, -1.0};
    case NamedState::PhiPlus:
    case NamedState::PhiMinus: return std::nullopt;  // coherence on rho_14
  }
  return std::nullopt;
}

DensityMatrix4 InitialState::build() const {
  if (const auto* named = std::get_if<NamedState>(&spec)) {
    if (*named == NamedState::PhiPlus) return bell_state(BellState::PhiPlus);
    if (*named == NamedState::PhiMinus) return bell_state(BellState::PhiMinus);
  }
  return x_state(*x_params());
}

void ScenarioConfig::validate() const {
  if (name.empty()) config_error("name", "must not be empty");
  waveguide.validate();
  if (!(separation > 0.0) || !std::isfinite(separation)) config_error("separation", "must be > 0");
  drive.validate();
  if (!(t_max > 0.0) || !std::isfinite(t_max)) config_error("time.t_max", "must be > 0");
  if (samples < 2) config_error("time.samples", "must be >= 2");
  if (!(dt > 0.0) || !std::isfinite(dt)) config_error("dt", "must be > 0");
  if (sweep.axis != SweepAxis::None) {
    if (sweep.points < 1) config_error("sweep.points", "must be >= 1");
    if (!std::isfinite(sweep.min) || !std::isfinite(sweep.max)) config_error("sweep", "bounds must be finite");
    if (sweep.max < sweep.min) config_error("sweep.max", "must be >= sweep.min");
    if (sweep.axis == SweepAxis::LaserAmplitude && sweep.min < 0.0) config_error("sweep.min", "amplitude must be >= 0");
    if (sweep.axis == SweepAxis::CPlus && (sweep.min < -2.0 || sweep.max > 2.0)) {
      config_error("sweep", "c_plus must lie in [-2, 2] for the Xi family");
    }
  }
  if (const auto* x = std::get_if<XStateParams>(&initial.spec)) {
    try {
      (void)x_state(*x);
    } catch (const Error& e) {
      config_error("initial", e.detail());
    }
  }
}

std::string_view to_string(SolutionMethod m) {
  switch (m) {
    case SolutionMethod::Resonant: return "resonant";
    case SolutionMethod::GammaZero: return "gamma_zero";
    case SolutionMethod::Detuned: return "detuned";
    case SolutionMethod::Integrator: return "integrator";
  }
  return "integrator";
}

PointSetup resolve_point(const ScenarioConfig& cfg, double sweep_value) {
  PointSetup p;
  p.sweep_value = sweep_value;
  p.drive = cfg.drive;
  InitialState initial = cfg.initial;
  switch (cfg.sweep.axis) {
    case SweepAxis::LaserAmplitude: p.drive.amplitude_1 = sweep_value; break;
    case SweepAxis::MolecularDetuning: p.drive.molecular_detuning = sweep_value; break;
    case SweepAxis::CPlus: initial.spec = XStateParams::xi(sweep_value); break;
    case SweepAxis::None: break;
  }
  p.collective = collective_params(cfg.waveguide, cfg.separation);
  if (cfg.coupling_override) p.collective.coupling = *cfg.coupling_override;
  if (cfg.collective_decay_override) p.collective.collective_decay = *cfg.collective_decay_override;
  if (cfg.detuning_mode == LaserDetuningMode::DressedResonance) {
    p.drive.laser_detuning = dressed_resonance(p.drive.molecular_detuning, p.collective.coupling);
  }
  if (!p.drive.has_laser()) p.drive.laser_detuning = 0.0;
  p.initial_state = initial.build();
  p.x_params = initial.x_params();
  return p;
}

SolutionMethod choose_method(const PointSetup& p) {
  if (p.drive.has_laser() || !p.x_params) return SolutionMethod::Integrator;
  const auto& cp = p.collective;
  const bool c_minus_zero = std::abs(p.x_params->c_minus()) <= 1e-12;
  if (p.drive.molecular_detuning == 0.0) {
    if (cp.collective_decay == 0.0 && c_minus_zero) return SolutionMethod::GammaZero;
    if (std::abs(cp.collective_decay) < cp.decay_rate - 1e-12) return SolutionMethod::Resonant;
    return SolutionMethod::Integrator;
  }
  if (cp.collective_decay == 0.0 && c_minus_zero) return SolutionMethod::Detuned;
  return SolutionMethod::Integrator;
}

std::vector<DensityMatrix4> point_states(const ScenarioConfig& cfg, const PointSetup& p, SolutionMethod method) {
  const auto times = uniform_times(cfg.t_max, cfg.samples);
  std::vector<DensityMatrix4> states;
  states.reserve(times.size());
  const double big = p.collective.decay_rate;
  switch (method) {
    case SolutionMethod::Resonant: {
      const ResonantSolutionParams rp{*p.x_params, big, p.collective.collective_decay, p.collective.coupling};
      for (double t : times) states.push_back(resonant_solution(t, rp));
      break;
    }
    case SolutionMethod::GammaZero:
      for (double t : times) states.push_back(gamma_zero_solution(t, *p.x_params, big));
      break;
    case SolutionMethod::Detuned:
      for (double t : times) {
        states.push_back(detuned_solution(t, *p.x_params, big, p.collective.coupling, p.drive.molecular_detuning));
      }
      break;
    case SolutionMethod::Integrator: {
      auto traj = evolve(p.initial_state, p.collective, p.drive, times, EvolveOptions{cfg.dt});
      states = std::move(traj.states);
      break;
    }
  }
  return states;
}

std::size_t ScenarioResult::row_count() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.records.size();
  return n;
}

ScenarioResult run_scenario(const ScenarioConfig& cfg, const RunOptions& opts) {
  cfg.validate();
  const auto sweep_values = cfg.sweep.values();
  const auto times = uniform_times(cfg.t_max, cfg.samples);

  ScenarioResult result;
  result.name = cfg.name;
  result.axis = cfg.sweep.axis;
  result.raw_elements = cfg.raw_elements;
  result.blocks.resize(sweep_values.size());

  auto run_point = [&](std::size_t i) {
    const double value = sweep_values[i];
    try {
      const PointSetup point = resolve_point(cfg, value);
      const SolutionMethod method = choose_method(point);
      const auto states = point_states(cfg, point, method);

      if (cfg.verify && method != SolutionMethod::Integrator) {
        const auto reference = point_states(cfg, point, SolutionMethod::Integrator);
        for (std::size_t k = 0; k < states.size(); ++k) {
          const double diff = max_abs_diff(states[k].matrix(), reference[k].matrix());
          if (diff > kVerifyTolerance) {
            throw Error(ErrorKind::VerificationFailed, std::string(to_string(method)) +
                                                           " solution differs from the integrator by " +
                                                           format_number(diff) + " at t = " + format_number(times[k]));
          }
        }
      }

      ScenarioBlock& block = result.blocks[i];
      block.sweep_value = value;
      block.method = method;
      block.records.reserve(states.size());
      for (std::size_t k = 0; k < states.size(); ++k) {
        TrajectoryRecord rec;
        rec.t = times[k];
        rec.report = correlation_report(states[k], opts.optimizer);
        rec.bell = bell_populations(states[k]);
        if (cfg.raw_elements) rec.raw = states[k].matrix();
        block.records.push_back(std::move(rec));
      }
    } catch (const Error& e) {
      throw with_context(e, cfg, value);
    }
  };

  const std::size_t workers = sweep_values.size() > 1 ? (opts.workers ? opts.workers : worker_count()) : 1;
  parallel_for(sweep_values.size(), workers, run_point);
  return result;
}

const std::vector<ScenarioConfig>& scenario_catalog() {
  static const std::vector<ScenarioConfig> catalog = build_catalog();
  return catalog;
}

std::optional<ScenarioConfig> find_scenario(std::string_view name) {
  for (const auto& c : scenario_catalog()) {
    if (c.name == name) return c;
  }
  return std::nullopt;
}

}  // namespace pdimer
