#include "pdimer/qmat.hpp"

#include <numeric>
#include <string>

#include "pdimer/error.hpp"

namespace pdimer {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTarget = 1e-14;

template <std::size_t N>
void require_hermitian(const Matrix<N>& m) {
  if (!m.is_finite()) throw Error(ErrorKind::NonFiniteInput, "matrix has NaN or Inf entries");
  const double defect = m.hermiticity_defect();
  if (defect > kHermitianTolerance) {
    throw Error(ErrorKind::NonHermitianInput,
                "max |M - M^dagger| = " + std::to_string(defect) + " exceeds 1e-12");
  }
}

template <std::size_t N>
double off_diagonal_norm(const Matrix<N>& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

template <std::size_t N>
double frobenius_norm(const Matrix<N>& a) {
  double s = 0.0;
  for (const auto& x : a.data()) s += std::norm(x);
  return std::sqrt(s);
}

// One two-sided complex Jacobi rotation zeroing a(p, q). The rotation is
// J = D * R with D = diag(1, e^{-i arg a_pq}) on (p, q) making the pivot
// real, and R the classical real rotation. a <- J^dagger a J, v <- v J.
template <std::size_t N>
void rotate(Matrix<N>& a, Matrix<N>& v, std::size_t p, std::size_t q) {
  const cplx apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const cplx phase = apq / mag;  // e^{i phi}

  const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  // Columns p, q of J.
  const cplx jpp = c;
  const cplx jqp = -s * std::conj(phase);
  const cplx jpq = s;
  const cplx jqq = c * std::conj(phase);

  // a <- a J (columns)
  for (std::size_t r = 0; r < N; ++r) {
    const cplx arp = a(r, p);
    const cplx arq = a(r, q);
    a(r, p) = arp * jpp + arq * jqp;
    a(r, q) = arp * jpq + arq * jqq;
  }
  // a <- J^dagger a (rows)
  for (std::size_t col = 0; col < N; ++col) {
    const cplx apc = a(p, col);
    const cplx aqc = a(q, col);
    a(p, col) = std::conj(jpp) * apc + std::conj(jqp) * aqc;
    a(q, col) = std::conj(jpq) * apc + std::conj(jqq) * aqc;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t r = 0; r < N; ++r) {
    const cplx vrp = v(r, p);
    const cplx vrq = v(r, q);
    v(r, p) = vrp * jpp + vrq * jqp;
    v(r, q) = vrp * jpq + vrq * jqq;
  }
}

double clamp_eigenvalue(double x) {
  if (x < -kEigenClampWindow) {
    throw Error(ErrorKind::NotPositiveSemidefinite,
                "eigenvalue " + std::to_string(x) + " below -1e-10");
  }
  return std::max(x, 0.0);
}

}  // namespace

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return m;
}

Matrix2 sigma_x() {
  Matrix2 m;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

Matrix2 sigma_y() {
  Matrix2 m;
  m(0, 1) = cplx(0.0, -1.0);
  m(1, 0) = cplx(0.0, 1.0);
  return m;
}

Matrix2 sigma_z() { return Matrix2::diagonal({1.0, -1.0}); }

Matrix2 sigma_plus() {
  Matrix2 m;
  m(1, 0) = 1.0;
  return m;
}

Matrix2 sigma_minus() {
  Matrix2 m;
  m(0, 1) = 1.0;
  return m;
}

template <std::size_t N>
EigenSystem<N> hermitian_eigensystem(const Matrix<N>& m) {
  require_hermitian(m);

  Matrix<N> a = m.hermitian_part();
  Matrix<N> v = Matrix<N>::identity();
  const double target = kOffDiagonalTarget * std::max(1.0, frobenius_norm(a));

  int sweep = 0;
  while (off_diagonal_norm(a) > target) {
    if (++sweep > kMaxSweeps) {
      throw Error(ErrorKind::NoConvergence, "Jacobi iteration exceeded 100 sweeps");
    }
    for (std::size_t p = 0; p + 1 < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) rotate(a, v, p, q);
  }

  std::array<std::size_t, N> order{};
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenSystem<N> es;
  for (std::size_t k = 0; k < N; ++k) {
    es.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < N; ++r) es.vectors(r, k) = v(r, order[k]);
  }
  return es;
}

template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const Matrix<N>& m) {
  if constexpr (N == 2) {
    require_hermitian(m);
    const double d0 = m(0, 0).real();
    const double d1 = m(1, 1).real();
    const double mean = 0.5 * (d0 + d1);
    const double half_gap = std::hypot(0.5 * (d0 - d1), std::abs(0.5 * (m(0, 1) + std::conj(m(1, 0)))));
    return {mean - half_gap, mean + half_gap};
  } else {
    return hermitian_eigensystem(m).values;
  }
}

template <std::size_t N>
Matrix<N> psd_sqrt(const Matrix<N>& m) {
  const auto es = hermitian_eigensystem(m);
  Matrix<N> r;
  for (std::size_t k = 0; k < N; ++k) {
    const double root = std::sqrt(clamp_eigenvalue(es.values[k]));
    if (root == 0.0) continue;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        r(i, j) += root * es.vectors(i, k) * std::conj(es.vectors(j, k));
  }
  return r;
}

double shannon_entropy(std::span<const double> probabilities) {
  double s = 0.0;
  for (double p : probabilities) {
    if (p > 0.0) s -= p * std::log2(p);
  }
  return s;
}

double binary_entropy(double r) {
  const std::array<double, 2> p{r, 1.0 - r};
  return shannon_entropy(p);
}

template <std::size_t N>
double von_neumann_entropy(const Matrix<N>& rho) {
  const cplx tr = rho.trace();
  if (std::abs(tr - 1.0) > 1e-9) {
    throw Error(ErrorKind::InvalidDensityMatrix, "trace " + std::to_string(tr.real()) + " differs from 1");
  }
  const auto values = hermitian_eigenvalues(rho);
  for (double x : values) {
    if (x < -kEigenClampWindow) {
      throw Error(ErrorKind::InvalidDensityMatrix, "eigenvalue " + std::to_string(x) + " below -1e-10");
    }
  }
  return shannon_entropy(values);
}

template EigenSystem<2> hermitian_eigensystem(const Matrix2&);
template EigenSystem<4> hermitian_eigensystem(const Matrix4&);
template std::array<double, 2> hermitian_eigenvalues(const Matrix2&);
template std::array<double, 4> hermitian_eigenvalues(const Matrix4&);
template Matrix2 psd_sqrt(const Matrix2&);
template Matrix4 psd_sqrt(const Matrix4&);
template double von_neumann_entropy(const Matrix2&);
template double von_neumann_entropy(const Matrix4&);

}  // namespace pdimer
