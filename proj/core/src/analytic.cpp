#include "pdimer/analytic.hpp"

#include <string>

#include "pdimer/error.hpp"

namespace pdimer {

namespace {

constexpr double kFamilyTolerance = 1e-12;

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw Error(ErrorKind::DomainError, "time must be finite and >= 0");
}

void require_c_minus_zero(const XStateParams& p) {
  if (std::abs(p.c_minus()) > kFamilyTolerance) {
    throw Error(ErrorKind::FamilyViolation, "closed form requires c_- = 0, got " + std::to_string(p.c_minus()));
  }
}

DensityMatrix4 assemble(double b_plus, double b_minus, double f, cplx z) {
  Matrix4 m = Matrix4::diagonal({1.0 - b_plus - b_minus - f, b_plus, b_minus, f});
  m(1, 2) = z;
  m(2, 1) = std::conj(z);
  return DensityMatrix4::from_matrix(m);
}

}  // namespace

DensityMatrix4 resonant_solution(double t, const ResonantSolutionParams& params) {
  require_time(t);
  (void)x_state(params.initial);
  const double big = params.decay_rate;
  const double g = params.collective_decay;
  if (std::abs(std::abs(g) - big) <= 1e-12) {
    throw Error(ErrorKind::DegenerateRates, "|gamma| = Gamma makes the resonant closed form singular");
  }
  if (std::abs(g) > big) {
    throw Error(ErrorKind::DomainError, "|gamma| must not exceed Gamma");
  }

  const double cp = params.initial.c_plus();
  const double cm = params.initial.c_minus();
  const double h3 = params.initial.h3;
  const double eta = params.initial.eta;
  const double p = params.p();
  const double gp2 = big * big + g * g;
  const double gm2 = big * big - g * g;

  // e^{-Gamma t} cosh(gamma t) and e^{-Gamma t} sinh(gamma t) via the two
  // normal-mode decays, which stays finite for large t.
  const double slow = std::exp(-(big - g) * t);
  const double fast = std::exp(-(big + g) * t);
  const double ecosh = 0.5 * (slow + fast);
  const double esinh = 0.5 * (slow - fast);
  const double e1 = std::exp(-big * t);
  const double scale = 1.0 / (4.0 * gm2);

  const double coeff_a = cp * gp2 - 2.0 * (big * big + h3 * g * g);
  const double coeff_b = 2.0 * (p * g * big + eta * gm2);
  const double osc = 2.0 * params.coupling * t;

  const double common = scale * (-p * gp2 * e1 * e1 - coeff_a * ecosh - coeff_b * esinh);
  const double split = scale * cm * gm2 * e1 * std::cos(osc);
  const double f = 0.25 * p * e1 * e1;
  const cplx z = scale * cplx(-2.0 * p * g * big * e1 * e1 + coeff_b * ecosh + coeff_a * esinh,
                              cm * gm2 * e1 * std::sin(osc));
  return assemble(common + split, common - split, f, z);
}

DensityMatrix4 gamma_zero_solution(double t, const XStateParams& initial, double decay_rate) {
  require_time(t);
  require_c_minus_zero(initial);
  (void)x_state(initial);
  const double x = std::exp(-decay_rate * t);
  const double cp = initial.c_plus();
  const double p = 1.0 + initial.h3 - cp;
  const double b = 0.25 * x * (2.0 * (1.0 - 0.5 * cp) - p * x);
  const double f = 0.25 * p * x * x;
  return assemble(b, b, f, 0.5 * initial.eta * x);
}

DensityMatrix4 detuned_solution(double t, const XStateParams& initial, double decay_rate, double coupling,
                                double molecular_detuning) {
  require_time(t);
  require_c_minus_zero(initial);
  (void)x_state(initial);
  const double v = coupling;
  const double d = molecular_detuning;
  const double u2 = 4.0 * v * v + d * d;
  if (!(u2 > 0.0)) throw Error(ErrorKind::DegenerateCase, "4V^2 + delta^2 must be > 0");
  const double u = std::sqrt(u2);

  const double e1 = std::exp(-decay_rate * t);
  const double g = e1 / (4.0 * u2);
  const double cp = initial.c_plus();
  const double eta = initial.eta;
  const double p = 1.0 + initial.h3 - cp;
  const double cu = std::cos(u * t);
  const double su = std::sin(u * t);

  const cplx z = 2.0 * eta * g * cplx(4.0 * v * v + d * d * cu, d * u * su);
  const double common = g * ((2.0 - cp) - p * e1) * u2;
  const double split = g * 4.0 * eta * (cu - 1.0) * d * v;
  const double f = 0.25 * p * e1 * e1;
  return assemble(common + split, common - split, f, z);
}

}  // namespace pdimer
