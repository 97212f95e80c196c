#pragma once

// Two-qubit states in the computational basis |00>, |01>, |10>, |11>
// (qubit A is the first factor; |0> ground, |1> excited).

#include <array>
#include <string_view>

#include "pdimer/qmat.hpp"

namespace pdimer {

inline constexpr double kTraceTolerance = 1e-9;

/// Validated two-qubit density matrix: Hermitian (1e-12), unit trace (1e-9),
/// eigenvalues >= -1e-10.
class DensityMatrix4 {
 public:
  /// Validates and stores the Hermitian part of m. Throws InvalidDensityMatrix.
  static DensityMatrix4 from_matrix(const Matrix4& m);

  /// Pure-state projector |psi><psi| after normalizing psi.
  static DensityMatrix4 pure(const std::array<cplx, 4>& psi);

  /// rho_A (x) rho_B; both factors must be valid 2x2 density matrices.
  static DensityMatrix4 product(const Matrix2& rho_a, const Matrix2& rho_b);

  const Matrix4& matrix() const { return m_; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  /// Populations a = rho_11 (ground-ground) .. f = rho_44 (doubly excited).
  double population(std::size_t i) const { return m_(i, i).real(); }

 private:
  explicit DensityMatrix4(const Matrix4& m) : m_(m) {}
  Matrix4 m_;
};

/// Initial X-state family (Fano form with a = (0,0,a3), b = (0,0,b3), h1 = h2 = eta).
struct XStateParams {
  double a3 = 0.0;
  double b3 = 0.0;
  double eta = 0.0;
  double h3 = 0.0;

  double c_plus() const { return a3 + b3; }
  double c_minus() const { return a3 - b3; }

  /// Xi family member: c_- = 0, eta = 0, h3 = c_+^2 / 4 (a product state).
  static XStateParams xi(double c_plus) { return {0.5 * c_plus, 0.5 * c_plus, 0.0, 0.25 * c_plus * c_plus}; }
};

/// Builds the X-state. Throws InvalidXState when the parameters are unphysical.
DensityMatrix4 x_state(const XStateParams& p);

/// Inverse of x_state for X-shaped matrices: a3 = <sz (x) 1>, b3 = <1 (x) sz>,
/// h3 = <sz (x) sz>, eta = 2 Re rho_23.
XStateParams read_x_params(const DensityMatrix4& rho);

enum class BellState { PsiPlus, PsiMinus, PhiPlus, PhiMinus };

std::array<cplx, 4> bell_vector(BellState which);
DensityMatrix4 bell_state(BellState which);

enum class Subsystem { A, B };

/// Reduced state of the kept subsystem.
Matrix2 partial_trace(const DensityMatrix4& rho, Subsystem keep);

struct BellPopulations {
  double psi_plus = 0.0;
  double psi_minus = 0.0;
  double phi_plus = 0.0;
  double phi_minus = 0.0;

  double sum() const { return psi_plus + psi_minus + phi_plus + phi_minus; }
};

BellPopulations bell_populations(const DensityMatrix4& rho);

// Named states used by the scenario catalog.
DensityMatrix4 ground_state();          // |00><00|
DensityMatrix4 maximally_mixed_state();  // I/4
DensityMatrix4 classical_state();        // (|00><00| + |11><11|) / 2

}  // namespace pdimer
