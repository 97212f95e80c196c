#pragma once

// Seeded random states and unitaries for property checks.

#include <random>

#include "pdimer/qmat.hpp"
#include "pdimer/states.hpp"

namespace pdimer {

using Rng = std::mt19937_64;

/// Haar-distributed unitary (QR of a complex Ginibre matrix).
template <std::size_t N>
Matrix<N> random_unitary(Rng& rng);

/// Ginibre-ensemble mixed state G G^dagger / Tr, with rank drawn from 1..4.
DensityMatrix4 random_density_matrix(Rng& rng);

/// Haar-random pure two-qubit state.
DensityMatrix4 random_pure_state(Rng& rng);

/// Random valid X-state parameters; c_- forced to 0 when requested.
XStateParams random_x_params(Rng& rng, bool c_minus_zero);

/// (U_A (x) U_B) rho (U_A (x) U_B)^dagger for a random local unitary.
DensityMatrix4 apply_random_local_unitary(const DensityMatrix4& rho, Rng& rng);

extern template Matrix2 random_unitary<2>(Rng&);
extern template Matrix4 random_unitary<4>(Rng&);

}  // namespace pdimer
