#include "amgm/gamma.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "amgm/errors.hpp"

namespace amgm::gamma {
namespace {

// Lanczos approximation with g = 607/128 and the 15-term coefficient set
// published by Godfrey (also used by GSL and Boost); accurate to about
// machine epsilon for real arguments >= 1/2.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

constexpr double kHalfLogTwoPi = 0.91893853320467274178;  // ln(2 pi) / 2

double log_gamma_lanczos(double x) {
  // Valid for x >= 0.5; callers shift smaller arguments first.
  double series = kLanczos[0];
  for (int k = 1; k < 15; ++k) {
    series += kLanczos[k] / (x + static_cast<double>(k) - 1.0);
  }
  const double base = x + kLanczosG - 0.5;
  return kHalfLogTwoPi + std::log(series) + (x - 0.5) * std::log(base) - base;
}

void require_min_dimension(std::int64_t n, std::int64_t min) {
  if (n < min) {
    throw validation_error(errc::invalid_dimension,
                           "need n >= " + std::to_string(min) + "; got " +
                               std::to_string(n));
  }
}

// log of the two-term Stirling expansion
// Gamma(z) ~ e^{-z} z^{z-1/2} sqrt(2 pi) (1 + 1/(12 z)).
double log_gamma_stirling_2term(double z) {
  return -z + (z - 0.5) * std::log(z) + kHalfLogTwoPi +
         std::log1p(1.0 / (12.0 * z));
}

}  // namespace

double log_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw validation_error(errc::non_positive_argument,
                           "log_gamma needs a finite x > 0");
  }
  if (x < 0.5) {
    // ln Gamma(x) = ln Gamma(x+1) - ln x keeps the approximation in its
    // well-conditioned range.
    return log_gamma_lanczos(x + 1.0) - std::log(x);
  }
  return log_gamma_lanczos(x);
}

double expected_l1_norm(std::int64_t n) {
  require_min_dimension(n, 1);
  const double dn = static_cast<double>(n);
  const double log_sqrt_pi = 0.5 * std::log(std::numbers::pi);
  return std::exp(std::log(dn) + log_gamma(dn / 2.0) - log_sqrt_pi -
                  log_gamma((dn + 1.0) / 2.0));
}

GammaRatioBounds gamma_ratio_bounds(std::int64_t n) {
  require_min_dimension(n, 2);
  const double dn = static_cast<double>(n);
  GammaRatioBounds b;
  b.lower = std::sqrt(2.0 / dn);
  b.ratio = std::exp(log_gamma(dn / 2.0) - log_gamma((dn + 1.0) / 2.0));
  b.upper = std::sqrt(2.0 / (dn - 1.0));
  b.holds = b.lower <= b.ratio && b.ratio <= b.upper;
  return b;
}

ExpectationBounds normalized_expectation_bounds(std::int64_t n) {
  require_min_dimension(n, 2);
  const double dn = static_cast<double>(n);
  const double sqrt_2_over_pi = std::sqrt(2.0 / std::numbers::pi);
  ExpectationBounds b;
  b.lower = sqrt_2_over_pi;
  b.value = expected_l1_norm(n) / std::sqrt(dn);
  b.upper = std::sqrt(dn / (dn - 1.0)) * sqrt_2_over_pi;
  b.holds = b.lower <= b.value && b.value <= b.upper;
  return b;
}

double stirling_expectation(std::int64_t n) {
  require_min_dimension(n, 4);
  const double dn = static_cast<double>(n);
  const double log_sqrt_pi = 0.5 * std::log(std::numbers::pi);
  return std::exp(std::log(dn) + log_gamma_stirling_2term(dn / 2.0) -
                  log_sqrt_pi - log_gamma_stirling_2term((dn + 1.0) / 2.0));
}

CertificationThreshold certification_threshold(std::int64_t n) {
  require_min_dimension(n, 2);
  const double dn = static_cast<double>(n);
  const double pi = std::numbers::pi;
  CertificationThreshold r;
  r.t = std::sqrt(std::log(pi / 2.0) + 2.0 * std::log(dn));
  const double upper_e = std::sqrt(dn / (dn - 1.0)) * std::sqrt(2.0 * dn / pi);
  r.guarantee_value =
      std::exp((r.t + pi / 2.0 + upper_e) / std::sqrt(dn) - 1.0);
  r.certified = r.guarantee_value < kCertificationTarget;
  return r;
}

std::int64_t first_certified_dimension() {
  std::int64_t hi = 2;
  while (!certification_threshold(hi).certified) {
    hi *= 2;
  }
  std::int64_t lo = hi / 2;  // not certified (or hi == 2 and lo is a sentinel)
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (certification_threshold(mid).certified) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double gm_concentration_constant() {
  // Euler-Mascheroni constant, 20 digits.
  constexpr double kEulerGamma = 0.57721566490153286061;
  const double psi_half = -kEulerGamma - 2.0 * std::log(2.0);
  return std::numbers::sqrt2 * std::exp(psi_half / 2.0);
}

AnalyticRow analytic_row(std::int64_t n) {
  require_min_dimension(n, 2);
  AnalyticRow row;
  row.n = n;
  const ExpectationBounds eb = normalized_expectation_bounds(n);
  row.expected_l1 = expected_l1_norm(n);
  row.normalized = eb.value;
  row.lower = eb.lower;
  row.upper = eb.upper;
  row.stirling_approx = n >= 4 ? stirling_expectation(n)
                               : std::numeric_limits<double>::quiet_NaN();
  const CertificationThreshold ct = certification_threshold(n);
  row.threshold_t = ct.t;
  row.guarantee_value = ct.guarantee_value;
  return row;
}

}  // namespace amgm::gamma
