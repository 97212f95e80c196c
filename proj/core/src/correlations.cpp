#include "pdimer/correlations.hpp"

#include <numbers>
#include <vector>
#include <string>

#include "pdimer/error.hpp"
#include "pdimer/nelder_mead.hpp"

namespace pdimer {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeroProbability = 1e-12;

// p S(rho/p) for an unnormalized 2x2 block with real diagonal d0, d1 and
// off-diagonal o, computed from its closed-form eigenvalues.
double weighted_block_entropy(double d0, double d1, cplx o) {
  const double p = d0 + d1;
  if (p < kZeroProbability) return 0.0;
  const double h = 0.5 * (d0 - d1);
  const double half_gap = std::sqrt(h * h + std::norm(o));
  const double hi = 0.5 * p + half_gap;
  const double lo = 0.5 * p - half_gap;
  double s = p * std::log2(p) - hi * std::log2(hi);
  if (lo > 0.0) s -= lo * std::log2(lo);
  return s;
}

// Measuring B with projectors (1 +- n.sigma)/2 leaves A in the unnormalized
// blocks (rho_A +- sum_k n_k T_k)/2 with T_k = Tr_B[(1 (x) sigma_k) rho].
// Blocks are stored as (d0, d1, Re o, Im o).
class ConditionalModel {
 public:
  explicit ConditionalModel(const Matrix4& rho) {
    const std::array<Matrix2, 4> paulis{Matrix2::identity(), sigma_x(), sigma_y(), sigma_z()};
    for (std::size_t k = 0; k < 4; ++k) {
      cplx t[2][2] = {};
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t ap = 0; ap < 2; ++ap)
          for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t bp = 0; bp < 2; ++bp) t[a][ap] += rho(2 * a + b, 2 * ap + bp) * paulis[k](bp, b);
      blocks_[k] = {t[0][0].real(), t[1][1].real(), t[0][1].real(), t[0][1].imag()};
    }
  }

  double operator()(double theta, double phi) const {
    const double s2 = std::sin(2.0 * theta);
    return at({s2 * std::cos(phi), s2 * std::sin(phi), std::cos(2.0 * theta)});
  }

  /// Entropy for the measurement along the unit Bloch vector n.
  double at(const std::array<double, 3>& n) const {
    std::array<double, 4> v{};
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t i = 0; i < 4; ++i) v[i] += n[k] * blocks_[k + 1][i];
    const auto& r = blocks_[0];
    return weighted_block_entropy(0.5 * (r[0] + v[0]), 0.5 * (r[1] + v[1]), 0.5 * cplx(r[2] + v[2], r[3] + v[3])) +
           weighted_block_entropy(0.5 * (r[0] - v[0]), 0.5 * (r[1] - v[1]), 0.5 * cplx(r[2] - v[2], r[3] - v[3]));
  }

 private:
  std::array<std::array<double, 4>, 4> blocks_{};
};

struct Entropies {
  double s_a;
  double s_b;
  double s_ab;
};

Entropies entropies(const DensityMatrix4& rho) {
  return {von_neumann_entropy(partial_trace(rho, Subsystem::A)), von_neumann_entropy(partial_trace(rho, Subsystem::B)),
          von_neumann_entropy(rho.matrix())};
}

double x_log_ratio(double x, double y) {
  // -x log2(x / (x + y)) with 0 log 0 = 0
  if (x <= 0.0) return 0.0;
  return -x * std::log2(x / (x + y));
}

}  // namespace

MeasurementAngles canonical_angles(double theta, double phi) {
  theta -= kPi * std::floor(theta / kPi);  // [0, pi): a sign flip of both amplitudes
  if (theta > 0.5 * kPi) {
    theta = kPi - theta;
    phi += kPi;
  }
  phi -= 2.0 * kPi * std::floor(phi / (2.0 * kPi));
  if (phi >= 2.0 * kPi) phi = 0.0;
  return {theta, phi};
}

double mutual_information(const DensityMatrix4& rho) {
  const auto e = entropies(rho);
  return e.s_a + e.s_b - e.s_ab;
}

double measured_conditional_entropy(const DensityMatrix4& rho, const MeasurementAngles& angles) {
  return ConditionalModel(rho.matrix())(angles.theta, angles.phi);
}

ConditionalEntropy conditional_entropy_min(const DensityMatrix4& rho, const OptimizerOptions& opts) {
  const ConditionalModel model(rho.matrix());
  const int nt = std::max(opts.grid_theta, 2);
  const int np = std::max(opts.grid_phi, 1);
  const double dtheta = 0.5 * kPi / (nt - 1);
  const double dphi = 2.0 * kPi / np;

  double best = model(0.0, 0.0);
  double best_theta = 0.0;
  double best_phi = 0.0;
  auto consider = [&](double theta, double phi) {
    const double v = model(theta, phi);
    if (v < best) {
      best = v;
      best_theta = theta;
      best_phi = phi;
    }
  };
  consider(0.25 * kPi, 0.0);
  std::vector<double> cos_phi(static_cast<std::size_t>(np)), sin_phi(cos_phi.size());
  for (int j = 0; j < np; ++j) {
    cos_phi[static_cast<std::size_t>(j)] = std::cos(j * dphi);
    sin_phi[static_cast<std::size_t>(j)] = std::sin(j * dphi);
  }
  for (int i = 0; i < nt; ++i) {
    const double s2 = std::sin(2.0 * i * dtheta);
    const double c2 = std::cos(2.0 * i * dtheta);
    for (std::size_t j = 0; j < cos_phi.size(); ++j) {
      const double v = model.at({s2 * cos_phi[j], s2 * sin_phi[j], c2});
      if (v < best) {
        best = v;
        best_theta = i * dtheta;
        best_phi = static_cast<double>(j) * dphi;
      }
    }
  }

  auto objective = [&](const std::array<double, 2>& x) { return model(x[0], x[1]); };
  const SimplexOptions sopts{opts.value_tolerance, opts.max_iterations};

  std::array<double, 2> step{dtheta, dphi};
  std::array<double, 2> start{best_theta, best_phi};
  // A second pass restarted from the first optimum with a smaller simplex
  // guards against early collapse of the first one.
  for (int pass = 0; pass < 2; ++pass) {
    const auto r = nelder_mead<2>(objective, start, step, sopts);
    if (r.value < best) {
      best = r.value;
      best_theta = r.x[0];
      best_phi = r.x[1];
    }
    start = {best_theta, best_phi};
    step = {step[0] / 8.0, step[1] / 8.0};
  }

  return {std::max(best, 0.0), canonical_angles(best_theta, best_phi)};
}

ClassicalCorrelation classical_correlation(const DensityMatrix4& rho, const OptimizerOptions& opts) {
  const auto ce = conditional_entropy_min(rho, opts);
  const double s_a = von_neumann_entropy(partial_trace(rho, Subsystem::A));
  return {s_a - ce.value, ce.angles};
}

double quantum_discord(const DensityMatrix4& rho, const OptimizerOptions& opts) {
  return correlation_report(rho, opts).discord;
}

double entropy_bound_lhs(const DensityMatrix4& rho, const OptimizerOptions& opts) {
  const auto e = entropies(rho);
  const auto ce = conditional_entropy_min(rho, opts);
  return 2.0 * ce.value - e.s_ab + e.s_b - e.s_a;
}

double concurrence(const DensityMatrix4& rho) {
  const Matrix4 yy = kron(sigma_y(), sigma_y());
  const Matrix4 tilde = yy * rho.matrix().conjugate() * yy;
  const Matrix4 root = psd_sqrt(rho.matrix());
  const Matrix4 product = (root * tilde * root).hermitian_part();
  const auto mu = hermitian_eigensystem(product).values;  // ascending
  std::array<double, 4> lambda{};
  for (std::size_t i = 0; i < 4; ++i) lambda[i] = std::sqrt(std::max(mu[3 - i], 0.0));
  return std::clamp(lambda[0] - lambda[1] - lambda[2] - lambda[3], 0.0, 1.0);
}

double eof_from_concurrence(double c) {
  const double cc = std::clamp(c, 0.0, 1.0);
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - cc * cc)));
}

double entanglement_of_formation(const DensityMatrix4& rho) { return eof_from_concurrence(concurrence(rho)); }

CorrelationReport correlation_report(const DensityMatrix4& rho, const OptimizerOptions& opts) {
  const auto e = entropies(rho);
  const auto ce = conditional_entropy_min(rho, opts);

  CorrelationReport r;
  r.mutual_information = e.s_a + e.s_b - e.s_ab;
  r.classical = e.s_a - ce.value;
  r.discord = r.mutual_information - r.classical;
  r.bound_lhs = 2.0 * ce.value - e.s_ab + e.s_b - e.s_a;
  r.concurrence = concurrence(rho);
  r.entanglement_of_formation = eof_from_concurrence(r.concurrence);
  r.optimal_angles = ce.angles;
  return r;
}

ClosedFormEntropies conditional_entropy_closed_form(double a, double b, double f, cplx z) {
  constexpr double kNegTol = 1e-12;
  if (a < -kNegTol || b < -kNegTol || f < -kNegTol) {
    throw Error(ErrorKind::DomainError, "negative population in closed-form conditional entropy");
  }
  if (std::abs(a + 2.0 * b + f - 1.0) > 1e-9) {
    throw Error(ErrorKind::DomainError, "populations must satisfy a + 2b + f = 1");
  }
  a = std::max(a, 0.0);
  b = std::max(b, 0.0);
  f = std::max(f, 0.0);

  ClosedFormEntropies out;
  out.s1 = x_log_ratio(a, b) + x_log_ratio(b, a) + x_log_ratio(b, f) + x_log_ratio(f, b);

  // Measuring B along sigma_x leaves A in [[a+b, +-z], [+-z*, b+f]] with
  // eigenvalues (1 +- xi)/2, xi^2 = (a - f)^2 + 4|z|^2.
  double xi = std::sqrt((a - f) * (a - f) + 4.0 * std::norm(z));
  if (xi > 1.0 + 1e-9) {
    throw Error(ErrorKind::DomainError, "coherence too large for the populations (xi > 1)");
  }
  xi = std::min(xi, 1.0);
  out.s2 = binary_entropy(0.5 * (1.0 - xi));
  return out;
}

}  // namespace pdimer
