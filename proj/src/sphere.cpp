#include "amgm/sphere.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "amgm/errors.hpp"
#include "amgm/summation.hpp"

namespace amgm::mc {

SphereVector::SphereVector(std::vector<double> coords)
    : coords_(std::move(coords)) {
  if (coords_.empty()) {
    throw validation_error(errc::invalid_argument,
                           "a sphere point needs at least one coordinate");
  }
  NeumaierSum sq;
  for (double y : coords_) sq.add(y * y);
  if (std::fabs(sq.value() - 1.0) > 1e-12) {
    throw validation_error(errc::invalid_argument,
                           "coordinates are not l2-normalized within 1e-12");
  }
}

void sample_unit_sphere_into(std::size_t n, NormalStream& stream,
                             std::vector<double>& out) {
  out.resize(n);
  for (int attempt = 0; attempt < 100; ++attempt) {
    NeumaierSum sq;
    for (std::size_t i = 0; i < n; ++i) {
      const double g = stream.next();
      out[i] = g;
      sq.add(g * g);
    }
    const double norm = std::sqrt(sq.value());
    if (norm > 0.0) {
      for (std::size_t i = 0; i < n; ++i) out[i] /= norm;
      return;
    }
  }
  throw internal_fault("sphere sampler drew 100 zero vectors in a row");
}

SphereVector sample_unit_sphere(std::size_t n, NormalStream& stream) {
  std::vector<double> coords;
  sample_unit_sphere_into(n, stream, coords);
  return SphereVector(std::move(coords));
}

SampleStats per_sample_stats(std::span<const double> unit_coords) {
  const std::size_t n = unit_coords.size();
  const double dn = static_cast<double>(n);

  // Sum of ln|y_i| kept as a running mantissa product with a separate
  // binary exponent: one multiply per element instead of one log, renormed
  // via frexp whenever the mantissa drifts far from 1.
  NeumaierSum abs_sum;
  double mant = 1.0;
  std::int64_t exp2 = 0;
  bool has_zero = false;
  for (double y : unit_coords) {
    const double a = std::fabs(y);
    abs_sum.add(a);
    if (a == 0.0) {
      has_zero = true;
    } else {
      mant *= a;
      if (mant < 0x1p-400 || mant > 0x1p400) {
        int e = 0;
        mant = std::frexp(mant, &e);
        exp2 += e;
      }
    }
  }

  SampleStats stats;
  stats.s1 = abs_sum.value() / std::sqrt(dn);
  stats.bound = std::exp(stats.s1 - 1.0);
  if (has_zero) {
    stats.gm_side = 0.0;
  } else {
    const double log_sum =
        std::log(mant) + static_cast<double>(exp2) * std::numbers::ln2;
    stats.gm_side = std::exp(0.5 * std::log(dn) + log_sum / dn);
  }
  stats.holds = stats.gm_side <= stats.bound * (1.0 + 1e-10);
  return stats;
}

SampleStats per_sample_stats(const SphereVector& y) {
  return per_sample_stats(std::span<const double>(y.coords()));
}

}  // namespace amgm::mc
