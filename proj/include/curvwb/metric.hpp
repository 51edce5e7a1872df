#pragma once

#include "curvwb/tensor.hpp"

namespace curvwb {

/// Constant positive-definite metric with its exact inverse.
/// g * g_inv = I holds entrywise by construction.
class Metric {
public:
  /// Validates symmetry and positive definiteness (exact leading principal
  /// minors), then inverts exactly. Throws input_error otherwise.
  static Metric make(Tensor g);
  static Metric identity(int dim);

  int dim() const { return g_.dim(); }
  const Tensor& g() const { return g_; }
  const Tensor& ginv() const { return ginv_; }
  const Rational& operator()(int i, int j) const { return g_(i, j); }
  const Rational& inv(int i, int j) const { return ginv_(i, j); }
  bool is_identity() const;

  friend bool operator==(const Metric& a, const Metric& b) { return a.g_ == b.g_; }

private:
  Metric(Tensor g, Tensor ginv) : g_(std::move(g)), ginv_(std::move(ginv)) {}
  Tensor g_, ginv_;
};

}  // namespace curvwb
