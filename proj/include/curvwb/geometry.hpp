#pragma once

#include <array>
#include <optional>

#include "curvwb/frame.hpp"

namespace curvwb {

/// Connection coefficients Γ(i,j,k): ∇_{e_i} e_j = Σ_k Γ(i,j,k) e_k.
struct Connection {
  Tensor gamma;
};

struct ConnectionCheck {
  bool torsion_free = true;
  std::optional<std::array<int, 3>> torsion_witness;  // 1-based (i,j,k)
  bool metric_compatible = true;
  std::optional<std::array<int, 2>> compat_witness;  // 1-based (j,k) under some e_i
};

/// Levi-Civita connection of a homogeneous frame via Koszul's formula;
/// all derivative terms vanish because the metric coefficients are constant:
///   2 g(∇_{e_i} e_j, e_k) = −g(e_i,[e_j,e_k]) − g(e_j,[e_i,e_k]) + g(e_k,[e_i,e_j])
Connection levi_civita(const FrameSpec& frame);

/// Torsion-freeness w.r.t. the brackets and metric compatibility, exact.
ConnectionCheck check_connection(const FrameSpec& frame, const Connection& conn);

/// R(e_i,e_j)e_k = ∇_i ∇_j e_k − ∇_j ∇_i e_k − ∇_{[e_i,e_j]} e_k, expanded
/// algebraically over the constant coefficients.
Tensor riemann(const FrameSpec& frame, const Connection& conn);

struct GeometryBundle {
  Connection conn;
  Tensor R;      // (1,3)
  Tensor R_low;  // (0,4)
  Tensor S;      // Ricci (0,2)
  Tensor Q_op;   // (1,1)
  Tensor S2;     // (0,2)
  Rational r;    // scalar curvature
};

/// Ricci package: S(X,Y) = trace of Z ↦ R(Z,X)Y, Q the g-raise of S,
/// S²(X,Y) = S(QX,Y), r = tr Q.
GeometryBundle ricci_package(const FrameSpec& frame, Connection conn, Tensor R);

/// Full bundle from the frame; uses the override iff frame.use_override.
GeometryBundle make_geometry(const FrameSpec& frame);

struct ConstCurvatureFit {
  std::optional<Rational> c;
  std::optional<std::array<int, 4>> witness;  // 1-based, set when no fit
  Rational residual;
};

/// Detects R(X,Y)Z = c [g(Y,Z)X − g(X,Z)Y] with a single exact constant.
ConstCurvatureFit constant_curvature_fit(const Tensor& R, const Metric& g);

}  // namespace curvwb
