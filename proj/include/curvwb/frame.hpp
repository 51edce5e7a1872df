#pragma once

#include <map>
#include <optional>
#include <string>

#include "curvwb/metric.hpp"
#include "curvwb/tensor.hpp"

namespace curvwb {

/// Contact ingredients on a frame: Reeb vector ξ and endomorphism φ,
/// both with constant frame components. η is derived as η(X) = g(X,ξ).
struct ContactData {
  Tensor xi;   // (1,0)
  Tensor phi;  // (1,1), phi(e_i) = Σ_k phi(i,k) e_k
};

/// Homogeneous frame: constant structure constants c(i,j,k) with
/// [e_i,e_j] = Σ_k c(i,j,k) e_k, and a constant metric. Construction
/// enforces bracket antisymmetry and the exact Jacobi identity.
struct FrameSpec {
  FrameSpec(int dim, Tensor brackets, Metric metric);

  int dim;
  Tensor brackets;  // slots (Lower, Lower, Upper)
  Metric metric;
  std::optional<ContactData> contact;
  std::optional<Tensor> connection_override;  // same layout as a Connection table
  bool use_override = false;
  std::map<std::string, Rational> params;  // bound parameter values, for reporting

  /// n with dim = 2n+1; only meaningful for odd dimensions.
  int contact_n() const { return (dim - 1) / 2; }
};

/// η as a (0,1) tensor, η_i = Σ_j g(i,j) ξ^j. Requires contact data.
Tensor eta_of(const FrameSpec& frame);

/// Shape-checks contact data against the frame and attaches it.
void attach_contact(FrameSpec& frame, Tensor xi, Tensor phi);

/// Shape-checks a connection table and attaches it as the override.
void attach_override(FrameSpec& frame, Tensor gamma);

}  // namespace curvwb
