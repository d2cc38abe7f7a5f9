#include "minorforge/bounds.hpp"

#include <cmath>

#include "minorforge/error.hpp"

namespace minorforge {

double p_value(std::int64_t n, std::int64_t k, std::int64_t b, double lambda) {
  if (n - 2 * k < 0) throw Error(ErrorCode::InvalidHypotheses, "n - 2k < 0");
  const double inner = static_cast<double>(2 * n - k - 2);
  if (inner <= 0) throw Error(ErrorCode::NonpositiveDenominator, "2n - k - 2 <= 0");
  const double den = static_cast<double>(n) - static_cast<double>(k + 1) / 2.0 - static_cast<double>(b) / inner - lambda;
  if (!(den > 0)) throw Error(ErrorCode::NonpositiveDenominator, "p denominator <= 0");
  return static_cast<double>(n - 2 * k) / den;
}

double bound_J(std::int64_t n, std::int64_t k, std::int64_t a, std::int64_t b, double lambda) {
  if (!(lambda > 0)) throw Error(ErrorCode::InvalidHypotheses, "lambda <= 0");
  if (!(lambda * lambda > 2.0 * static_cast<double>(n))) throw Error(ErrorCode::InvalidHypotheses, "lambda^2 <= 2n");
  if (2 * n - k - 4 <= 0) throw Error(ErrorCode::InvalidHypotheses, "2n - k - 4 <= 0");
  double p = 0;
  try {
    p = p_value(n, k, b, lambda);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidHypotheses, std::string("p undefined: ") + e.what());
  }
  const double q = 1.0 - 2.0 * static_cast<double>(n) / (lambda * lambda);
  const double km1 = static_cast<double>(k - 1);
  const double x1 = static_cast<double>(2 * n - k - 2);
  const double x3 = static_cast<double>(2 * n - k - 4);
  const double quads = static_cast<double>(b) * km1 * km1 * p * p / (4.0 * x1 * x3);
  const double triples = static_cast<double>(a) * km1 * p / (2.0 * x1);
  return (quads + triples) / q;
}

double g_asymptotic(double z, double zeta) {
  constexpr double eps = 1e-15;
  if (!(z >= 0 && z <= 0.25) || !(zeta >= 0 && zeta <= z * z + eps))
    throw Error(ErrorCode::DomainError, "need 0 <= z <= 1/4 and 0 <= zeta <= z^2");
  const double den = 1 + zeta - 3 * z + 2 * z * z;
  if (!(den > 0)) throw Error(ErrorCode::DomainError, "denominator <= 0");
  const double num =
      z * (1 - 4 * z) * (z * z * (1 - 5 * z + 4 * z * z) + zeta * (4 - 13 * z + 12 * z * z) + 4 * zeta * zeta);
  return num / (den * den);
}

double f_univariate(double z) {
  if (!(z >= 0 && z <= 0.25)) throw Error(ErrorCode::DomainError, "need 0 <= z <= 1/4");
  const double den = 1 - 3 * z + 3 * z * z;
  return z * z * z * (5 - 38 * z + 92 * z * z - 80 * z * z * z) / (den * den);
}

GammaResult gamma_optimize(double tolerance) {
  if (!(tolerance > 0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  constexpr int grid = 10'000;
  constexpr double hi = 0.25;
  int best = 0;
  double best_f = f_univariate(0);
  for (int i = 1; i <= grid; ++i) {
    const double f = f_univariate(hi * i / grid);
    if (f > best_f) {
      best_f = f;
      best = i;
    }
  }
  double lo_z = hi * std::max(best - 1, 0) / grid;
  double hi_z = hi * std::min(best + 1, grid) / grid;
  const double inv_phi = (std::sqrt(5.0) - 1) / 2;
  double c = hi_z - inv_phi * (hi_z - lo_z);
  double d = lo_z + inv_phi * (hi_z - lo_z);
  double fc = f_univariate(c);
  double fd = f_univariate(d);
  while (hi_z - lo_z > tolerance) {
    if (fc > fd) {
      hi_z = d;
      d = c;
      fd = fc;
      c = hi_z - inv_phi * (hi_z - lo_z);
      fc = f_univariate(c);
    } else {
      lo_z = c;
      c = d;
      fc = fd;
      d = lo_z + inv_phi * (hi_z - lo_z);
      fd = f_univariate(d);
    }
  }
  GammaResult r;
  r.z_star = (lo_z + hi_z) / 2;
  r.f_max = f_univariate(r.z_star);
  if (best_f > r.f_max) {  // refinement never loses to the grid
    r.z_star = hi * best / grid;
    r.f_max = best_f;
  }
  r.gamma = 1 - r.f_max;
  return r;
}

bool zeta_monotonicity_check(int grid_steps, const std::function<double(double, double)>& g) {
  if (grid_steps < 2) throw Error(ErrorCode::InvalidArgument, "grid_steps must be at least 2");
  for (int i = 0; i <= grid_steps; ++i) {
    const double z = 0.25 * i / grid_steps;
    const double top = z * z;
    double prev = g(z, 0.0);
    for (int j = 1; j <= grid_steps; ++j) {
      const double cur = g(z, top * j / grid_steps);
      // prev is the running maximum, so this covers every pair zeta1 < zeta2.
      if (prev > cur + 1e-12) return false;
      prev = std::max(prev, cur);
    }
  }
  return true;
}

bool zeta_monotonicity_check(int grid_steps) {
  return zeta_monotonicity_check(grid_steps, [](double z, double zeta) { return g_asymptotic(z, zeta); });
}

BoundReport make_bound_report(std::int64_t n, std::int64_t k, std::int64_t a, std::int64_t b, double lambda) {
  BoundReport r;
  r.n = n;
  r.k = k;
  r.a = a;
  r.b = b;
  r.lambda = lambda;
  r.q = lambda != 0 ? 1.0 - 2.0 * static_cast<double>(n) / (lambda * lambda) : -INFINITY;
  try {
    r.p = p_value(n, k, b, lambda);
  } catch (const Error&) {
  }
  try {
    r.rhs_J = bound_J(n, k, a, b, lambda);
  } catch (const Error& e) {
    r.rhs_J_invalid_reason = e.what();
  }
  if (n > 0) {
    r.z = static_cast<double>(k) / (2.0 * static_cast<double>(n));
    r.zeta = static_cast<double>(a) / (4.0 * static_cast<double>(n) * static_cast<double>(n));
    try {
      r.rhs_J2_fraction = g_asymptotic(r.z, r.zeta);
    } catch (const Error&) {
    }
  }
  return r;
}

}  // namespace minorforge
