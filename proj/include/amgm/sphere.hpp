#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "amgm/rng.hpp"

namespace amgm::mc {

// A point on the Euclidean unit sphere: sum of squares equals 1 within
// 1e-12 absolute, enforced at construction.
class SphereVector {
 public:
  explicit SphereVector(std::vector<double> coords);

  std::size_t dim() const noexcept { return coords_.size(); }
  const std::vector<double>& coords() const noexcept { return coords_; }

 private:
  std::vector<double> coords_;
};

// Uniform point on the sphere: n independent standard normals, normalized.
// A zero draw (possible in floating point, probability ~0) is rejected and
// redrawn; 100 consecutive zero draws abort as an internal fault.
SphereVector sample_unit_sphere(std::size_t n, NormalStream& stream);

// Same, writing into a caller-owned buffer so hot loops skip allocation.
void sample_unit_sphere_into(std::size_t n, NormalStream& stream,
                             std::vector<double>& out);

// Per-point statistics of the correction-factor comparison on the sphere:
// s1 = ||y||_1 / sqrt(n), bound = exp(s1 - 1), and
// gm_side = sqrt(n) * prod |y_i|^{1/n} (0 if any coordinate is 0).
// holds records gm_side <= bound within relative slack 1e-10.
struct SampleStats {
  double s1 = 0.0;
  double bound = 0.0;
  double gm_side = 0.0;
  bool holds = false;
};

SampleStats per_sample_stats(const SphereVector& y);
SampleStats per_sample_stats(std::span<const double> unit_coords);

}  // namespace amgm::mc
