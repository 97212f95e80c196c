#include "pdimer/dynamics.hpp"

#include <numbers>
#include <string>

#include "pdimer/error.hpp"

namespace pdimer {

namespace {

constexpr double kPositivityFloor = -1e-8;

struct Operators {
  Matrix4 raise[2];
  Matrix4 lower[2];
  Matrix4 excited[2];  // |1><1| on emitter i
};

const Operators& operators() {
  static const Operators ops = [] {
    const Matrix2 id = Matrix2::identity();
    Operators o;
    o.raise[0] = kron(sigma_plus(), id);
    o.raise[1] = kron(id, sigma_plus());
    o.lower[0] = kron(sigma_minus(), id);
    o.lower[1] = kron(id, sigma_minus());
    for (int i = 0; i < 2; ++i) o.excited[i] = o.raise[i] * o.lower[i];
    return o;
  }();
  return ops;
}

void config_error(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::ConfigError, field + ": " + what);
}

// Right-hand side with precomputed non-Hermitian part:
// d rho = -i (K rho - rho K^dagger) + sum_ij G_ij s-_j rho s+_i,
// K = H - (i/2) sum_ij G_ij s+_i s-_j.
class Generator {
 public:
  Generator(const Matrix4& h, double decay, double collective) {
    const auto& ops = operators();
    const double g[2][2] = {{decay, collective}, {collective, decay}};
    Matrix4 anti;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) anti += g[i][j] * (ops.raise[i] * ops.lower[j]);
    k_ = h - cplx(0.0, 0.5) * anti;
    k_dag_ = k_.adjoint();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) rates_[i][j] = g[i][j];
  }

  Matrix4 operator()(const Matrix4& rho) const {
    const auto& ops = operators();
    Matrix4 out = cplx(0.0, -1.0) * (k_ * rho - rho * k_dag_);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        if (rates_[i][j] == 0.0) continue;
        out += rates_[i][j] * (ops.lower[j] * rho * ops.raise[i]);
      }
    return out;
  }

 private:
  Matrix4 k_;
  Matrix4 k_dag_;
  double rates_[2][2] = {};
};

Matrix4 rk4_step(const Generator& gen, const Matrix4& rho, double h) {
  const Matrix4 k1 = gen(rho);
  const Matrix4 k2 = gen(rho + (0.5 * h) * k1);
  const Matrix4 k3 = gen(rho + (0.5 * h) * k2);
  const Matrix4 k4 = gen(rho + h * k3);
  return rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

DensityMatrix4 checked_state(const Matrix4& raw, double t, Trajectory& traj) {
  traj.max_hermiticity_defect = std::max(traj.max_hermiticity_defect, raw.hermiticity_defect());
  Matrix4 m = raw.hermitian_part();
  const double tr = m.trace().real();
  traj.max_trace_drift = std::max(traj.max_trace_drift, std::abs(tr - 1.0));
  if (std::abs(tr - 1.0) > 1e-9) m *= 1.0 / tr;

  const auto es = hermitian_eigensystem(m);
  traj.min_eigenvalue = std::min(traj.min_eigenvalue, es.values.front());
  if (es.values.front() < kPositivityFloor) {
    throw Error(ErrorKind::PositivityLost,
                "eigenvalue " + std::to_string(es.values.front()) + " at t = " + std::to_string(t));
  }
  if (es.values.front() < -kEigenClampWindow) {
    Matrix4 fixed;
    double total = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
      const double l = std::max(es.values[k], 0.0);
      total += l;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) fixed(i, j) += l * es.vectors(i, k) * std::conj(es.vectors(j, k));
    }
    m = (fixed * (1.0 / total)).hermitian_part();
  }
  return DensityMatrix4::from_matrix(m);
}

}  // namespace

void WaveguideParams::validate() const {
  if (!(decay_rate > 0.0)) config_error("waveguide.decay_rate", "must be > 0");
  if (!(beta > 0.0 && beta <= 1.0)) config_error("waveguide.beta", "must lie in (0, 1]");
  if (!(plasmon_wavelength > 0.0)) config_error("waveguide.plasmon_wavelength", "must be > 0");
  if (!(propagation_length > 0.0)) config_error("waveguide.propagation_length", "must be > 0");
}

void DriveConfig::validate() const {
  if (!(amplitude_1 >= 0.0)) config_error("drive.amplitude_1", "must be >= 0");
  if (!(amplitude_2 >= 0.0)) config_error("drive.amplitude_2", "must be >= 0");
  if (!std::isfinite(laser_detuning)) config_error("drive.laser_detuning", "must be finite");
  if (!std::isfinite(molecular_detuning)) config_error("drive.molecular_detuning", "must be finite");
  if (switch_off && !(*switch_off >= 0.0)) config_error("drive.switch_off", "must be >= 0");
}

SinCos sincos_two_pi(double x) {
  // x = n + q/4 + w with |w| <= 1/8; the residual w is exact in floating point.
  const double u = x - std::round(x);
  const double q = std::round(4.0 * u);
  const double w = u - 0.25 * q;
  const double angle = 2.0 * std::numbers::pi * w;
  const double s = w == 0.0 ? 0.0 : std::sin(angle);
  const double c = w == 0.0 ? 1.0 : std::cos(angle);
  switch (static_cast<int>(q)) {
    case 1: return {c, -s};
    case -1: return {-c, s};
    case 2:
    case -2: return {-s, -c};
    default: return {s, c};
  }
}

CollectiveParams collective_params(const WaveguideParams& w, double zeta) {
  w.validate();
  if (!(zeta > 0.0) || !std::isfinite(zeta)) {
    throw Error(ErrorKind::InvalidSeparation, "separation zeta must be > 0, got " + std::to_string(zeta));
  }
  const double envelope = w.beta * std::exp(-w.plasmon_wavelength / (2.0 * w.propagation_length) * zeta);
  const auto sc = sincos_two_pi(zeta);
  CollectiveParams cp;
  cp.decay_rate = w.decay_rate;
  cp.coupling = 0.5 * w.decay_rate * envelope * sc.sin;
  cp.collective_decay = w.decay_rate * envelope * sc.cos;
  cp.separation = zeta;
  cp.below_validity_range = zeta < 0.25;
  return cp;
}

DressedStates dressed_states(double molecular_detuning, double coupling) {
  if (molecular_detuning == 0.0 && coupling == 0.0) {
    throw Error(ErrorKind::DegenerateCase, "dressed states undefined for delta = V = 0");
  }
  const double half = 0.5 * molecular_detuning;
  const double root = std::hypot(coupling, half);
  // delta/2 + root cancels for negative delta; use V^2 / (root - delta/2) there.
  const double kappa = half >= 0.0 ? half + root : coupling * coupling / (root - half);
  DressedStates d;
  d.kappa = kappa;
  if (coupling == 0.0) {
    // Uncoupled: the upper state is the excited emitter with the higher frequency.
    d.alpha_1 = half < 0.0 ? 1.0 : 0.0;
    d.alpha_2 = half < 0.0 ? 0.0 : 1.0;
  } else {
    const double norm2 = kappa * kappa + coupling * coupling;
    d.alpha_1 = std::sqrt(coupling * coupling / norm2);
    d.alpha_2 = std::sqrt(kappa * kappa / norm2);
  }
  d.omega_plus = root;
  d.omega_minus = -root;
  return d;
}

double dressed_resonance(double molecular_detuning, double coupling) {
  return std::hypot(coupling, 0.5 * molecular_detuning);
}

Matrix4 effective_hamiltonian(const CollectiveParams& cp, const DriveConfig& drive, bool laser_on) {
  const auto& ops = operators();
  // omega_{1,2} - omega_L = +-delta/2 - Delta; (x/2)(|1><1| - |0><0|) = x |1><1| - x/2.
  const double offsets[2] = {0.5 * drive.molecular_detuning - drive.laser_detuning,
                             -0.5 * drive.molecular_detuning - drive.laser_detuning};
  Matrix4 h;
  for (int i = 0; i < 2; ++i) h += offsets[i] * (ops.excited[i] - 0.5 * Matrix4::identity());
  h += cp.coupling * (ops.raise[0] * ops.lower[1] + ops.lower[0] * ops.raise[1]);
  if (laser_on) {
    const double amps[2] = {drive.amplitude_1, drive.amplitude_2};
    for (int i = 0; i < 2; ++i) h += amps[i] * (ops.raise[i] + ops.lower[i]);
  }
  return h;
}

Matrix4 lindblad_rhs(const Matrix4& rho, const Matrix4& hamiltonian, double decay_rate, double collective_decay) {
  const auto& ops = operators();
  const double g[2][2] = {{decay_rate, collective_decay}, {collective_decay, decay_rate}};
  Matrix4 out = cplx(0.0, 1.0) * (rho * hamiltonian - hamiltonian * rho);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const Matrix4 jump = ops.raise[i] * ops.lower[j];
      out -= (0.5 * g[i][j]) * (rho * jump + jump * rho - 2.0 * (ops.lower[i] * rho * ops.raise[j]));
    }
  return out;
}

std::vector<double> uniform_times(double t_max, int samples) {
  std::vector<double> t(static_cast<std::size_t>(std::max(samples, 1)));
  if (samples <= 1) return t;
  for (int k = 0; k < samples; ++k) t[static_cast<std::size_t>(k)] = t_max * k / (samples - 1);
  t.back() = t_max;
  return t;
}

Trajectory evolve(const DensityMatrix4& rho0, const CollectiveParams& cp, const DriveConfig& drive,
                  std::span<const double> times, const EvolveOptions& opts) {
  drive.validate();
  if (times.empty()) throw Error(ErrorKind::ConfigError, "time grid is empty");
  if (times.front() != 0.0) throw Error(ErrorKind::ConfigError, "time grid must start at 0");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) throw Error(ErrorKind::ConfigError, "time grid must be strictly increasing");
  }
  if (!(opts.dt > 0.0)) throw Error(ErrorKind::ConfigError, "dt must be > 0");

  const Generator on(effective_hamiltonian(cp, drive, true), cp.decay_rate, cp.collective_decay);
  const Generator off(effective_hamiltonian(cp, drive, false), cp.decay_rate, cp.collective_decay);

  Trajectory traj;
  traj.times.assign(times.begin(), times.end());
  traj.states.reserve(times.size());

  Matrix4 rho = rho0.matrix();
  traj.states.push_back(checked_state(rho, 0.0, traj));

  double t = 0.0;
  for (std::size_t k = 1; k < times.size(); ++k) {
    const double target = times[k];
    // Split at t_off when it falls inside this output interval.
    std::vector<double> stops;
    if (drive.has_laser() && drive.switch_off && *drive.switch_off > t && *drive.switch_off < target) {
      stops.push_back(*drive.switch_off);
    }
    stops.push_back(target);
    for (double stop : stops) {
      const double span = stop - t;
      const auto n = static_cast<long>(std::ceil(span / opts.dt - 1e-9));
      const long steps = std::max(n, 1L);
      const double h = span / static_cast<double>(steps);
      const Generator& gen = drive.laser_on_at(t) ? on : off;
      for (long s = 0; s < steps; ++s) rho = rk4_step(gen, rho, h);
      t = stop;
    }
    traj.states.push_back(checked_state(rho, t, traj));
    rho = traj.states.back().matrix();
  }
  return traj;
}

}  // namespace pdimer
