#pragma once

#include <cstdint>

namespace amgm::gamma {

// Certification cutoff for the guarantee value; the asymptotic limit of the
// guarantee is exp(sqrt(2/pi) - 1) ~ 0.8170, safely under it.
inline constexpr double kCertificationTarget = 0.82;

// Natural log of Gamma(x) for x > 0. Relative error stays below 1e-13 on
// [0.5, 1e7] (absolute near the zeros at x = 1 and x = 2).
double log_gamma(double x);

// E(l1 norm) of a uniform point on the unit sphere in R^n:
// n * Gamma(n/2) / (sqrt(pi) * Gamma((n+1)/2)), evaluated in log domain so
// it stays finite long after Gamma itself overflows.
double expected_l1_norm(std::int64_t n);

// sqrt(2/n) <= Gamma(n/2)/Gamma((n+1)/2) <= sqrt(2/(n-1)) for n >= 2.
struct GammaRatioBounds {
  double lower = 0.0;
  double ratio = 0.0;
  double upper = 0.0;
  bool holds = false;
};

GammaRatioBounds gamma_ratio_bounds(std::int64_t n);

// sqrt(2/pi) <= E(l1)/sqrt(n) <= sqrt(n/(n-1)) * sqrt(2/pi) for n >= 2.
struct ExpectationBounds {
  double lower = 0.0;
  double value = 0.0;
  double upper = 0.0;
  bool holds = false;
};

ExpectationBounds normalized_expectation_bounds(std::int64_t n);

// expected_l1_norm with both Gamma factors replaced by the two-term
// Stirling expansion Gamma(z) ~ e^{-z} z^{z-1/2} sqrt(2 pi) (1 + 1/(12z)).
// Needs n >= 4 so both arguments are >= 2.
double stirling_expectation(std::int64_t n);

// Deviation level t = sqrt(ln((pi/2) n^2)) and the resulting guaranteed
// upper bound exp((t + pi/2 + upper_E)/sqrt(n) - 1) on the typical
// correction factor, where upper_E = sqrt(n/(n-1)) * sqrt(2n/pi) bounds
// E(l1). certified means the chain closes below kCertificationTarget.
struct CertificationThreshold {
  double t = 0.0;
  double guarantee_value = 0.0;
  bool certified = false;
};

CertificationThreshold certification_threshold(std::int64_t n);

// Smallest n whose certification threshold is certified. guarantee_value
// is strictly decreasing in n, so a doubling scan plus binary search works.
std::int64_t first_certified_dimension();

// sqrt(2) * exp(psi(1/2)/2) with psi(1/2) = -euler_gamma - 2 ln 2; the
// value sqrt(n) * prod |y_i|^{1/n} concentrates around it for large n.
double gm_concentration_constant();

// One table row of the analytic quantities at dimension n >= 2.
// stirling_approx is NaN for n < 4 (expansion not meaningful there).
struct AnalyticRow {
  std::int64_t n = 0;
  double expected_l1 = 0.0;
  double normalized = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double stirling_approx = 0.0;
  double threshold_t = 0.0;
  double guarantee_value = 0.0;
};

AnalyticRow analytic_row(std::int64_t n);

}  // namespace amgm::gamma
