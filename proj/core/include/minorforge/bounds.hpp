#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace minorforge {

// Closed forms of the expected-missing-edge bound for the matching-plus-
// seagull minor, its large-n limit, and the density constant.
//
// Throughout, n is half the vertex count of the host graph (the order of
// the minor), k the size of the clique Z, a the total complement degree of
// Z and b the number of complement edges outside Z.

/// p = (n - 2k) / (n - (k+1)/2 - b/(2n-k-2) - lambda).
/// Throws NonpositiveDenominator, or InvalidHypotheses when n - 2k < 0.
double p_value(std::int64_t n, std::int64_t k, std::int64_t b, double lambda);

/// Upper bound on the expected number of missing minor edges:
///   1/(1 - 2n/lambda^2) * ( b (k-1)^2 p^2 / (4 (2n-k-2)(2n-k-4))
///                         + a (k-1) p / (2 (2n-k-2)) ).
/// Throws InvalidHypotheses naming the failed condition.
double bound_J(std::int64_t n, std::int64_t k, std::int64_t a, std::int64_t b, double lambda);

/// Limit of bound_J / C(n,2) with z = k/(2n), zeta = a/(4n^2):
///   z(1-4z)(z^2(1-5z+4z^2) + zeta(4-13z+12z^2) + 4 zeta^2) / (1 + zeta - 3z + 2z^2)^2.
/// Domain 0 <= z <= 1/4, 0 <= zeta <= z^2; throws DomainError outside it.
double g_asymptotic(double z, double zeta);

/// g(z, z^2) = z^3 (5 - 38z + 92z^2 - 80z^3) / (1 - 3z + 3z^2)^2 on [0, 1/4].
double f_univariate(double z);

struct GammaResult {
  double z_star = 0;
  double f_max = 0;
  double gamma = 0;  // 1 - f_max
};

/// 10^4-point grid over [0, 1/4], then golden-section refinement of the
/// best bracket until it is narrower than tolerance.
GammaResult gamma_optimize(double tolerance);

/// For each z on a grid of [0, 1/4] and grid values zeta1 < zeta2 in
/// [0, z^2], checks g(z, zeta1) <= g(z, zeta2) + 1e-12.
bool zeta_monotonicity_check(int grid_steps);
bool zeta_monotonicity_check(int grid_steps, const std::function<double(double, double)>& g);

struct BoundReport {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  double lambda = 0;
  std::optional<double> p;
  double q = 0;  // 1 - 2n/lambda^2, recorded even when <= 0
  std::optional<double> rhs_J;
  std::string rhs_J_invalid_reason;  // empty when rhs_J is set
  double z = 0;
  double zeta = 0;
  std::optional<double> rhs_J2_fraction;
};

BoundReport make_bound_report(std::int64_t n, std::int64_t k, std::int64_t a, std::int64_t b, double lambda);

}  // namespace minorforge
