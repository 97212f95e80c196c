#pragma once

// Closed-form trajectories of the undriven master equation for the X-state
// family. Populations: a = rho_11, b_+ = rho_22, b_- = rho_33, f = rho_44,
// coherence z = rho_23.

#include "pdimer/states.hpp"

namespace pdimer {

struct ResonantSolutionParams {
  XStateParams initial;
  double decay_rate = 1.0;        // Gamma
  double collective_decay = 0.0;  // gamma
  double coupling = 0.0;          // V

  /// p = 1 + h3 - c_+ (four times the initial doubly-excited population).
  double p() const { return 1.0 + initial.h3 - initial.c_plus(); }
};

/// Identical resonant emitters without drive, any X-state initial condition.
/// Throws DegenerateRates when |gamma| = Gamma within 1e-12.
DensityMatrix4 resonant_solution(double t, const ResonantSolutionParams& params);

/// gamma = 0 family (quarter-integer separations) with c_- = 0; independent of V.
/// Throws FamilyViolation when |c_-| > 1e-12.
DensityMatrix4 gamma_zero_solution(double t, const XStateParams& initial, double decay_rate);

/// Detuned emitters at gamma = 0 with c_- = 0 and no drive. Reduces to
/// gamma_zero_solution at delta = 0. Throws FamilyViolation or DegenerateCase
/// (4 V^2 + delta^2 = 0).
DensityMatrix4 detuned_solution(double t, const XStateParams& initial, double decay_rate, double coupling,
                                double molecular_detuning);

}  // namespace pdimer
