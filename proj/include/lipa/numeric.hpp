#pragma once

namespace lipa {

// Compensated (Kahan) accumulator. The summation order is part of every
// caller's contract: integrals and path sums always add terms in fixed
// index order so results do not depend on scheduling.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - compensation_;
    const double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

// One relaxation step of a generalized path cost: cost so far plus the
// g-weighted step length, charged at the step's source point. Shared by
// the label-setting solver and the brute-force oracle so both accumulate
// bit-identical values along identical paths.
inline double path_step_cost(double base, double g_at_source, double step_length) {
  return base + g_at_source * step_length;
}

}  // namespace lipa
