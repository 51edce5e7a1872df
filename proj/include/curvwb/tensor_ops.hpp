#pragma once

#include "curvwb/metric.hpp"
#include "curvwb/tensor.hpp"

namespace curvwb {

/// (X ∧ Y)Z = g(Y,Z)X − g(X,Z)Y for frame vectors with exact components.
Tensor wedge_apply(const Tensor& x, const Tensor& y, const Tensor& z, const Metric& g);

/// Kulkarni–Nomizu product of the metric with a symmetric (0,2) tensor:
///   (g∧A)(X,Y,Z,W) = g(X,W)A(Y,Z) + g(Y,Z)A(X,W) − g(X,Z)A(Y,W) − g(Y,W)A(X,Z)
Tensor kulkarni_nomizu(const Metric& g, const Tensor& a);

/// Endomorphism E acting as a derivation on a fully covariant tensor:
///   (E·T)(X_1..X_l) = −Σ_s T(X_1, .., E X_s, .., X_l)
Tensor endo_action(const Tensor& e, const Tensor& t);

/// A(e_u, e_v) as an endomorphism, A a (1,3) curvature-type tensor.
Tensor endo_from_curv(const Tensor& a, int u, int v);

/// A(ξ, e_u) as an endomorphism, ξ given by frame components.
Tensor endo_contract_first(const Tensor& a, const Tensor& xi, int u);

/// (e_u ∧ e_v) as an endomorphism.
Tensor wedge_endo(const Metric& g, int u, int v);

/// The full wedge family W[u][v] = (e_u ∧ e_v), packed as a (1,3) tensor.
Tensor wedge_family(const Metric& g);

/// Derivation action of A(e_u, e_v) on a (0,l) tensor, Eq-style sum.
Tensor derivation_action(const Tensor& a, int u, int v, const Tensor& t);

Tensor lower_last(const Tensor& t, const Metric& g);
Tensor raise_last(const Tensor& t, const Metric& g);

/// g(v, w) for vectors given by frame components.
Rational inner(const Metric& g, const Tensor& v, const Tensor& w);

}  // namespace curvwb
