#pragma once

// Independent references built on Eigen: dense eigensolvers and the
// Liouvillian superoperator exponential.

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "pdimer/qmat.hpp"
#include "pdimer/states.hpp"

namespace oracle {

using M2 = Eigen::Matrix2cd;
using M4 = Eigen::Matrix4cd;
using M16 = Eigen::Matrix<std::complex<double>, 16, 16>;

template <std::size_t N>
Eigen::Matrix<std::complex<double>, int(N), int(N)> to_eigen(const pdimer::Matrix<N>& m) {
  Eigen::Matrix<std::complex<double>, int(N), int(N)> e;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) e(int(r), int(c)) = m(r, c);
  return e;
}

inline pdimer::Matrix4 from_eigen(const M4& e) {
  pdimer::Matrix4 m;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = e(int(r), int(c));
  return m;
}

inline M4 kron(const M2& a, const M2& b) { return Eigen::kroneckerProduct(a, b).eval(); }

// Single-qubit operators in the (|0>, |1>) basis, |1> excited.
inline M2 lower() {
  M2 m = M2::Zero();
  m(0, 1) = 1.0;
  return m;
}
inline M2 excited() {
  M2 m = M2::Zero();
  m(1, 1) = 1.0;
  return m;
}

struct Model {
  double gamma_ind = 1.0;  // Gamma
  double gamma_12 = 0.0;   // gamma
  double coupling = 0.0;   // V
  double l1 = 0.0, l2 = 0.0;
  double laser_detuning = 0.0;      // Delta
  double molecular_detuning = 0.0;  // delta
};

// H in the frame rotating at the laser frequency, written with number
// operators: (omega_i - omega_L) n_i + V (s1+ s2- + h.c.) + l_i sx_i.
// The constant offset relative to the spin form does not affect dynamics.
inline M4 hamiltonian(const Model& m, bool laser) {
  const M2 id = M2::Identity();
  const M2 s = lower();
  const M2 n = excited();
  const M2 sx = s + s.adjoint();
  const double w1 = m.molecular_detuning / 2 - m.laser_detuning;
  const double w2 = -m.molecular_detuning / 2 - m.laser_detuning;
  const M4 s1 = kron(s, id), s2 = kron(id, s);
  M4 h = w1 * kron(n, id) + w2 * kron(id, n) + m.coupling * (s1.adjoint() * s2 + s2.adjoint() * s1);
  if (laser) h += m.l1 * kron(sx, id) + m.l2 * kron(id, sx);
  return h;
}

// Column-stacking vectorization: vec(A X B) = (B^T (x) A) vec(X).
inline M16 liouvillian(const Model& m, bool laser) {
  const M4 h = hamiltonian(m, laser);
  const M4 id = M4::Identity();
  M16 l = -std::complex<double>(0, 1) * (Eigen::kroneckerProduct(id, h) - Eigen::kroneckerProduct(h.transpose(), id)).eval();
  // Diagonalized dissipator: symmetric and antisymmetric channels at Gamma +- gamma.
  const M4 s1 = kron(lower(), M2::Identity()), s2 = kron(M2::Identity(), lower());
  const std::pair<M4, double> channels[] = {{(s1 + s2) / std::sqrt(2.0), m.gamma_ind + m.gamma_12},
                                            {(s1 - s2) / std::sqrt(2.0), m.gamma_ind - m.gamma_12}};
  for (const auto& [c, rate] : channels) {
    const M4 cdc = c.adjoint() * c;
    l += rate * (Eigen::kroneckerProduct(c.conjugate(), c).eval() -
                 0.5 * Eigen::kroneckerProduct(id, cdc).eval() - 0.5 * Eigen::kroneckerProduct(cdc.transpose(), id).eval());
  }
  return l;
}

inline Eigen::Matrix<std::complex<double>, 16, 1> vec(const M4& rho) {
  return Eigen::Map<const Eigen::Matrix<std::complex<double>, 16, 1>>(rho.data());
}

inline M4 unvec(const Eigen::Matrix<std::complex<double>, 16, 1>& v) { return Eigen::Map<const M4>(v.data()); }

inline M4 propagate(const M16& l, double t, const M4& rho) { return unvec((l * t).exp() * vec(rho)); }

// Von Neumann entropy in bits from Eigen's self-adjoint solver.
inline double entropy(const Eigen::MatrixXcd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
  double s = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double p = es.eigenvalues()(i);
    if (p > 1e-15) s -= p * std::log2(p);
  }
  return s;
}

}  // namespace oracle
