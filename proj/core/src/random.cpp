#include "pdimer/random.hpp"

#include "pdimer/error.hpp"

namespace pdimer {

namespace {

template <std::size_t N>
Matrix<N> ginibre(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix<N> g;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) g(r, c) = cplx(normal(rng), normal(rng));
  return g;
}

}  // namespace

template <std::size_t N>
Matrix<N> random_unitary(Rng& rng) {
  // Modified Gram-Schmidt on the columns; the phase of each column is kept
  // as drawn, which is equivalent to fixing R's diagonal positive.
  Matrix<N> q = ginibre<N>(rng);
  for (std::size_t k = 0; k < N; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      cplx proj = 0.0;
      for (std::size_t r = 0; r < N; ++r) proj += std::conj(q(r, j)) * q(r, k);
      for (std::size_t r = 0; r < N; ++r) q(r, k) -= proj * q(r, j);
    }
    double norm2 = 0.0;
    for (std::size_t r = 0; r < N; ++r) norm2 += std::norm(q(r, k));
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t r = 0; r < N; ++r) q(r, k) *= inv;
  }
  return q;
}

DensityMatrix4 random_density_matrix(Rng& rng) {
  std::uniform_int_distribution<int> rank_dist(1, 4);
  const int rank = rank_dist(rng);
  Matrix4 g = ginibre<4>(rng);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = static_cast<std::size_t>(rank); c < 4; ++c) g(r, c) = 0.0;
  Matrix4 rho = g * g.adjoint();
  rho *= 1.0 / rho.trace().real();
  return DensityMatrix4::from_matrix(rho.hermitian_part());
}

DensityMatrix4 random_pure_state(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::array<cplx, 4> psi{};
  for (auto& x : psi) x = cplx(normal(rng), normal(rng));
  return DensityMatrix4::pure(psi);
}

XStateParams random_x_params(Rng& rng, bool c_minus_zero) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    XStateParams p{u(rng), u(rng), u(rng), u(rng)};
    if (c_minus_zero) p.b3 = p.a3;
    try {
      (void)x_state(p);
      return p;
    } catch (const Error&) {
    }
  }
  throw Error(ErrorKind::DomainError, "could not draw a valid X-state");
}

DensityMatrix4 apply_random_local_unitary(const DensityMatrix4& rho, Rng& rng) {
  const Matrix4 u = kron(random_unitary<2>(rng), random_unitary<2>(rng));
  return DensityMatrix4::from_matrix((u * rho.matrix() * u.adjoint()).hermitian_part());
}

template Matrix2 random_unitary<2>(Rng&);
template Matrix4 random_unitary<4>(Rng&);

}  // namespace pdimer
