#pragma once

// Fixed-dimension complex linear algebra for one- and two-qubit operators.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>

namespace pdimer {

using cplx = std::complex<double>;

/// Dense N x N complex matrix, row-major. Only N = 2 and N = 4 are used.
template <std::size_t N>
class Matrix {
 public:
  static constexpr std::size_t dim = N;

  constexpr Matrix() = default;

  static Matrix zero() { return Matrix{}; }

  static Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix diagonal(std::span<const double> values) {
    Matrix m;
    for (std::size_t i = 0; i < N && i < values.size(); ++i) m(i, i) = values[i];
    return m;
  }
  static Matrix diagonal(std::initializer_list<double> values) {
    return diagonal(std::span<const double>(values.begin(), values.size()));
  }

  /// |v><v| for a (not necessarily normalized) vector.
  static Matrix outer(const std::array<cplx, N>& v) {
    Matrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m(r, c) = v[r] * std::conj(v[c]);
    return m;
  }

  cplx& operator()(std::size_t r, std::size_t c) { return a_[r * N + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return a_[r * N + c]; }

  std::span<const cplx, N * N> data() const { return a_; }

  Matrix adjoint() const {
    Matrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m(r, c) = std::conj((*this)(c, r));
    return m;
  }

  Matrix conjugate() const {
    Matrix m;
    for (std::size_t i = 0; i < N * N; ++i) m.a_[i] = std::conj(a_[i]);
    return m;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  /// (M + M^dagger) / 2
  Matrix hermitian_part() const { return (*this + adjoint()) * 0.5; }

  double max_abs() const {
    double m = 0.0;
    for (const auto& x : a_) m = std::max(m, std::abs(x));
    return m;
  }

  /// max |M - M^dagger| over elements.
  double hermiticity_defect() const {
    double d = 0.0;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = r; c < N; ++c)
        d = std::max(d, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return d;
  }

  bool is_finite() const {
    return std::all_of(a_.begin(), a_.end(),
                       [](const cplx& x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); });
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) a_[i] += o.a_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) a_[i] -= o.a_[i];
    return *this;
  }
  Matrix& operator*=(cplx s) {
    for (auto& x : a_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, cplx s) { return a *= s; }
  friend Matrix operator*(cplx s, Matrix a) { return a *= s; }
  friend Matrix operator*(Matrix a, double s) { return a *= cplx(s); }
  friend Matrix operator*(double s, Matrix a) { return a *= cplx(s); }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    Matrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k) {
        const cplx xrk = x(r, k);
        if (xrk == cplx{}) continue;
        for (std::size_t c = 0; c < N; ++c) m(r, c) += xrk * y(k, c);
      }
    return m;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::array<cplx, N * N> a_{};
};

using Matrix2 = Matrix<2>;
using Matrix4 = Matrix<4>;

/// max |a - b| over elements.
template <std::size_t N>
double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b) {
  return (a - b).max_abs();
}

/// A (x) B, with A acting on the first (most significant) tensor factor.
Matrix4 kron(const Matrix2& a, const Matrix2& b);

// Pauli operators in the (|0>, |1>) basis; sigma_z = diag(1, -1).
Matrix2 sigma_x();
Matrix2 sigma_y();
Matrix2 sigma_z();
/// sigma_+ = |1><0| (raising: ground |0> to excited |1>).
Matrix2 sigma_plus();
/// sigma_- = |0><1|.
Matrix2 sigma_minus();

template <std::size_t N>
struct EigenSystem {
  std::array<double, N> values{};  // ascending
  Matrix<N> vectors;               // column k pairs with values[k]
};

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kEigenClampWindow = 1e-10;

/// Cyclic complex Jacobi. Throws NonHermitianInput, NonFiniteInput or NoConvergence.
template <std::size_t N>
EigenSystem<N> hermitian_eigensystem(const Matrix<N>& m);

/// Eigenvalues only, ascending. Closed form for N = 2.
template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const Matrix<N>& m);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [-1e-10, 0) are clamped to zero; anything lower throws NotPositiveSemidefinite.
template <std::size_t N>
Matrix<N> psd_sqrt(const Matrix<N>& m);

/// -sum x log2 x over the given probabilities, with 0 log 0 = 0.
/// Values in [-1e-10, 0) count as zero.
double shannon_entropy(std::span<const double> probabilities);

/// Binary entropy h(r) = -r log2 r - (1-r) log2 (1-r).
double binary_entropy(double r);

/// Von Neumann entropy in bits. Validates trace (1e-9) and positivity
/// (-1e-10), throwing InvalidDensityMatrix otherwise.
template <std::size_t N>
double von_neumann_entropy(const Matrix<N>& rho);

extern template EigenSystem<2> hermitian_eigensystem(const Matrix2&);
extern template EigenSystem<4> hermitian_eigensystem(const Matrix4&);
extern template std::array<double, 2> hermitian_eigenvalues(const Matrix2&);
extern template std::array<double, 4> hermitian_eigenvalues(const Matrix4&);
extern template Matrix2 psd_sqrt(const Matrix2&);
extern template Matrix4 psd_sqrt(const Matrix4&);
extern template double von_neumann_entropy(const Matrix2&);
extern template double von_neumann_entropy(const Matrix4&);

}  // namespace pdimer
