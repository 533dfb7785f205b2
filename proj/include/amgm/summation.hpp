#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace amgm {

// Neumaier's improvement of Kahan summation. Keeps absolute error near one
// ulp of the true sum even when late terms dwarf the running total, which
// plain Kahan does not guarantee.
class NeumaierSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }

  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double compensated_total(std::span<const double> xs) noexcept {
  NeumaierSum acc;
  for (double x : xs) acc.add(x);
  return acc.value();
}

}  // namespace amgm
