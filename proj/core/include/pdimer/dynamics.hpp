#pragma once

// Plasmon-mediated dimer dynamics. Units: the individual decay rate Gamma
// sets the rate unit, times are in 1/Gamma and every energy (V, gamma,
// laser amplitudes, detunings) is in units of Gamma with hbar = 1.

#include <optional>
#include <span>
#include <vector>

#include "pdimer/states.hpp"

namespace pdimer {

struct WaveguideParams {
  double decay_rate = 1.0;             // Gamma
  double beta = 0.94;                  // guided fraction, (0, 1]
  double plasmon_wavelength = 542.0;   // lambda_pl
  double propagation_length = 2000.0;  // L, same length unit as lambda_pl

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

struct CollectiveParams {
  double decay_rate = 1.0;  // Gamma (carried along for the master equation)
  double coupling = 0.0;    // V
  double collective_decay = 0.0;  // gamma
  double separation = 0.0;  // zeta = d / lambda_pl
  /// zeta < 1/4, where the plasmonic approximation is no longer reliable.
  bool below_validity_range = false;
};

/// V = (Gamma/2) beta e^{-lambda_pl zeta / 2L} sin(2 pi zeta),
/// gamma = Gamma beta e^{-lambda_pl zeta / 2L} cos(2 pi zeta).
/// Quarter-integer zeta gives exact zeros. Throws InvalidSeparation for zeta <= 0.
CollectiveParams collective_params(const WaveguideParams& w, double zeta);

/// sin(2 pi x) and cos(2 pi x) with exact values at quarter-integer x.
struct SinCos {
  double sin;
  double cos;
};
SinCos sincos_two_pi(double x);

struct DriveConfig {
  double amplitude_1 = 0.0;          // l_1
  double amplitude_2 = 0.0;          // l_2
  double laser_detuning = 0.0;       // Delta = omega_L - omega_0
  double molecular_detuning = 0.0;   // delta = omega_1 - omega_2
  std::optional<double> switch_off;  // t_off

  bool has_laser() const { return amplitude_1 > 0.0 || amplitude_2 > 0.0; }
  bool laser_on_at(double t) const { return has_laser() && (!switch_off || t < *switch_off); }
  void validate() const;
};

struct DressedStates {
  double alpha_1 = 0.0;
  double alpha_2 = 0.0;
  double omega_plus = 0.0;   // relative to omega_0
  double omega_minus = 0.0;  // relative to omega_0
  double kappa = 0.0;
};

/// Single-excitation eigenstates alpha_1|01> + alpha_2|10> (at omega_plus) and
/// alpha_2|01> - alpha_1|10>. The amplitudes are magnitudes; for V < 0 the
/// eigenvectors carry sign(V) on alpha_1. Throws DegenerateCase when delta = V = 0.
DressedStates dressed_states(double molecular_detuning, double coupling);

/// Laser frequency resonant with the upper dressed state: sqrt(V^2 + (delta/2)^2).
double dressed_resonance(double molecular_detuning, double coupling);

/// Rotating-frame Hamiltonian: sum_i ((omega_i - omega_L)/2)(|1><1| - |0><0|)_i
/// + V (s+ s- + s- s+) + [laser_on] sum_i l_i (s+_i + s-_i).
Matrix4 effective_hamiltonian(const CollectiveParams& cp, const DriveConfig& drive, bool laser_on);

/// d rho / dt = i [rho, H] - sum_ij (Gamma_ij / 2)(rho s+_i s-_j + s+_i s-_j rho - 2 s-_i rho s+_j)
/// with Gamma_11 = Gamma_22 = Gamma and Gamma_12 = Gamma_21 = gamma.
Matrix4 lindblad_rhs(const Matrix4& rho, const Matrix4& hamiltonian, double decay_rate, double collective_decay);

struct EvolveOptions {
  double dt = 1e-3;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix4> states;
  // Diagnostics gathered before any correction at the emitted times.
  double min_eigenvalue = 0.0;
  double max_hermiticity_defect = 0.0;
  double max_trace_drift = 0.0;
};

/// Fixed-step RK4. Between consecutive output times (and at t_off) the
/// interval is split into equal steps no longer than dt, so each output time
/// and the switch-off instant fall on step boundaries. Emitted states are
/// Hermitized, renormalized when the trace drifts by more than 1e-9 and
/// checked for positivity (PositivityLost below -1e-8; eigenvalues in
/// [-1e-8, -1e-10) are clamped).
Trajectory evolve(const DensityMatrix4& rho0, const CollectiveParams& cp, const DriveConfig& drive,
                  std::span<const double> times, const EvolveOptions& opts = {});

/// 0, t_max/(n-1), ..., t_max.
std::vector<double> uniform_times(double t_max, int samples);

}  // namespace pdimer
