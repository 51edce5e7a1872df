#pragma once

#include "curvwb/metric.hpp"
#include "curvwb/tensor.hpp"

namespace curvwb {

/// Execution mode for the batch kernels. Results are bit-identical across
/// modes: every output entry is an independent exact sum.
enum class ExecMode { Serial, Parallel };

/// Batch derivation action: for a curvature-type family A and a fully
/// covariant (0,l) tensor T, produces the (0,l+2) tensor
///   U(X_1..X_l; e_u, e_v) = −Σ_s T(X_1, .., A(e_u,e_v) X_s, .., X_l)
/// with the family indices (u,v) appended as the trailing slots.
Tensor derivation_full_serial(const Tensor& a, const Tensor& t);
Tensor derivation_full_parallel(const Tensor& a, const Tensor& t);
Tensor derivation_full(const Tensor& a, const Tensor& t, ExecMode mode = ExecMode::Parallel);

/// Q(g,T): the same batch action with A(e_u,e_v) = (e_u ∧ e_v).
Tensor q_full(const Metric& g, const Tensor& t, ExecMode mode = ExecMode::Parallel);

}  // namespace curvwb
