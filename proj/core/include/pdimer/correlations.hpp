#pragma once

// Correlation measures of a two-qubit state. All entropies are in bits and
// every measurement-based quantity measures qubit B.

#include "pdimer/states.hpp"

namespace pdimer {

/// Projective measurement on B: |a> = cos t|0> + e^{i p} sin t|1>,
/// |b> = e^{-i p} sin t|0> - cos t|1>, with theta in [0, pi/2], phi in [0, 2 pi).
struct MeasurementAngles {
  double theta = 0.0;
  double phi = 0.0;
};

/// Maps any (theta, phi) onto the canonical ranges describing the same
/// projector pair.
MeasurementAngles canonical_angles(double theta, double phi);

struct OptimizerOptions {
  int grid_theta = 64;
  int grid_phi = 64;
  double value_tolerance = 1e-9;
  int max_iterations = 500;
};

struct ConditionalEntropy {
  double value = 0.0;  // bits
  MeasurementAngles angles;
};

struct ClassicalCorrelation {
  double value = 0.0;  // bits
  MeasurementAngles angles;
};

struct CorrelationReport {
  double mutual_information = 0.0;
  double classical = 0.0;
  double discord = 0.0;
  double concurrence = 0.0;
  double entanglement_of_formation = 0.0;
  double bound_lhs = 0.0;
  MeasurementAngles optimal_angles;
};

double mutual_information(const DensityMatrix4& rho);

/// sum_j p_j S(rho_{A|j}) for the given measurement on B. Outcomes with
/// p_j < 1e-12 contribute zero.
double measured_conditional_entropy(const DensityMatrix4& rho, const MeasurementAngles& angles);

/// Minimum of measured_conditional_entropy: 64 x 64 grid plus the
/// computational and sigma_x seeds, then simplex refinement.
ConditionalEntropy conditional_entropy_min(const DensityMatrix4& rho, const OptimizerOptions& opts = {});

ClassicalCorrelation classical_correlation(const DensityMatrix4& rho, const OptimizerOptions& opts = {});

/// I - C, sharing the optimal measurement with classical_correlation.
double quantum_discord(const DensityMatrix4& rho, const OptimizerOptions& opts = {});

/// 2 S_min - S(AB) + S(B) - S(A), which equals D - C.
double entropy_bound_lhs(const DensityMatrix4& rho, const OptimizerOptions& opts = {});

/// Wootters concurrence via the Hermitian matrix sqrt(rho) rho~ sqrt(rho).
double concurrence(const DensityMatrix4& rho);

double eof_from_concurrence(double c);
double entanglement_of_formation(const DensityMatrix4& rho);

/// Every measure at once with a single measurement optimization.
CorrelationReport correlation_report(const DensityMatrix4& rho, const OptimizerOptions& opts = {});

struct ClosedFormEntropies {
  double s1 = 0.0;  // sigma_z measurement on B
  double s2 = 0.0;  // sigma_x measurement on B
  double min() const { return s1 < s2 ? s1 : s2; }
};

/// Conditional entropies of the c_- = 0 X-state with populations
/// (a, b, b, f) and coherence rho_23 = z. Requires a + 2b + f = 1 (1e-9)
/// and nonnegative populations (DomainError otherwise).
ClosedFormEntropies conditional_entropy_closed_form(double a, double b, double f, cplx z);

}  // namespace pdimer
