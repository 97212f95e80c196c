#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

namespace pdimer {

template <std::size_t D>
struct SimplexResult {
  std::array<double, D> x{};
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct SimplexOptions {
  double value_tolerance = 1e-9;  // stop once max f - min f over the simplex falls below this
  int max_iterations = 500;
};

/// Unconstrained Nelder-Mead in D dimensions, standard coefficients
/// (reflect 1, expand 2, contract 1/2, shrink 1/2). The initial simplex is
/// start plus one vertex displaced by step[i] along each axis.
template <std::size_t D, class F>
SimplexResult<D> nelder_mead(F&& f, const std::array<double, D>& start, const std::array<double, D>& step,
                             const SimplexOptions& opts = {}) {
  using Point = std::array<double, D>;
  std::array<Point, D + 1> x{};
  std::array<double, D + 1> fx{};
  x[0] = start;
  for (std::size_t i = 0; i < D; ++i) {
    x[i + 1] = start;
    x[i + 1][i] += step[i];
  }
  for (std::size_t i = 0; i <= D; ++i) fx[i] = f(x[i]);

  auto along = [](const Point& base, const Point& toward, double t) {
    Point p;
    for (std::size_t i = 0; i < D; ++i) p[i] = base[i] + t * (toward[i] - base[i]);
    return p;
  };

  SimplexResult<D> result;
  int iter = 0;
  for (; iter < opts.max_iterations; ++iter) {
    std::array<std::size_t, D + 1> idx{};
    for (std::size_t i = 0; i <= D; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
    {
      auto xs = x;
      auto fs = fx;
      for (std::size_t i = 0; i <= D; ++i) {
        x[i] = xs[idx[i]];
        fx[i] = fs[idx[i]];
      }
    }
    if (fx[D] - fx[0] < opts.value_tolerance) {
      result.converged = true;
      break;
    }

    Point centroid{};
    for (std::size_t j = 0; j < D; ++j)
      for (std::size_t i = 0; i < D; ++i) centroid[i] += x[j][i] / static_cast<double>(D);

    const Point reflected = along(centroid, x[D], -1.0);
    const double fr = f(reflected);
    if (fr < fx[0]) {
      const Point expanded = along(centroid, x[D], -2.0);
      const double fe = f(expanded);
      if (fe < fr) {
        x[D] = expanded;
        fx[D] = fe;
      } else {
        x[D] = reflected;
        fx[D] = fr;
      }
      continue;
    }
    if (fr < fx[D - 1]) {
      x[D] = reflected;
      fx[D] = fr;
      continue;
    }
    const bool outside = fr < fx[D];
    const Point contracted = outside ? along(centroid, reflected, 0.5) : along(centroid, x[D], 0.5);
    const double fc = f(contracted);
    if (fc < (outside ? fr : fx[D])) {
      x[D] = contracted;
      fx[D] = fc;
      continue;
    }
    for (std::size_t j = 1; j <= D; ++j) {
      x[j] = along(x[0], x[j], 0.5);
      fx[j] = f(x[j]);
    }
  }

  const auto best = static_cast<std::size_t>(std::min_element(fx.begin(), fx.end()) - fx.begin());
  result.x = x[best];
  result.value = fx[best];
  result.iterations = iter;
  return result;
}

}  // namespace pdimer
