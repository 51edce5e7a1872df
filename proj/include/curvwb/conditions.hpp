#pragma once

#include <array>

#include "curvwb/kernels.hpp"
#include "curvwb/nullity.hpp"

namespace curvwb {

enum class ConditionKind {
  CtildeXiCtilde,  // C̃(ξ,X)·C̃ = 0
  CtildeXiR,       // C̃(ξ,X)·R = 0
  CtildeXiS,       // C̃(ξ,X)·S = 0
  CtildeXiC,       // C̃(ξ,X)·C = 0
  CdotS,           // C·S = 0
  Pseudosymmetry,  // R·C = f_C Q(g,C)
};

const char* condition_id(ConditionKind kind);
ConditionKind condition_from_id(const std::string& id);

enum class FcStatus { NotApplicable, Indeterminate, Fitted, NoFit };

struct ConditionVerdict {
  std::string id;
  bool holds = true;
  std::vector<int> witness;  // 1-based, set when holds = false
  FcStatus fc_status = FcStatus::NotApplicable;
  std::optional<Rational> f_c;
  std::optional<bool> f_c_is_minus_kappa;
};

/// Decision procedure for the ξ-based derivation conditions and C·S.
/// The defining tensor is evaluated entrywise; holds ⇔ it vanishes.
ConditionVerdict check_curvature_condition(ConditionKind kind, const FrameSpec& frame,
                                           const GeometryBundle& b, const Tensor& ctilde,
                                           const Tensor* weyl_c);

/// Full (0,6) solve of R·C = f_C Q(g,C): indeterminate when both sides
/// vanish, a unique exact f_C otherwise, or a witnessed no-fit.
ConditionVerdict pseudosymmetry_fit(const GeometryBundle& b, const Tensor& weyl_c,
                                    const Metric& g,
                                    const std::optional<Rational>& kappa = std::nullopt,
                                    ExecMode mode = ExecMode::Parallel);

enum class SSquareStatus { Holds, Fails, OutOfHypothesis, PremiseNotSatisfied };

struct SSquareReport {
  SSquareStatus status = SSquareStatus::Holds;
  bool equality_holds = false;  // informational, evaluated in every case
  std::vector<int> witness;
};

/// When C·S = 0 holds and n > 1, verifies
///   S² = [(2n−1)κ − (2n−1)r/(2n(2n+1))] S − 2nκ [κ + (2n−1)r/(2n(2n+1))] g.
SSquareReport s_square_formula_check(const GeometryBundle& b, const Metric& g,
                                     const Rational& kappa, int n, bool c_dot_s_holds);

struct Lemma31Report {
  Rational alpha, lambda;
  bool poly_solved = false;   // A² = αA + λg found exactly
  bool identity_holds = false;  // T·T = α Q(g,T) entrywise, T = g∧A
  std::vector<int> witness;
};

/// For symmetric A: solves A² = αA + λg exactly (underdetermined systems
/// pin λ = 0), then verifies T·T = α Q(g,T) for T = g∧A entrywise.
Lemma31Report lemma31_check(const Metric& g, const Tensor& a, ExecMode mode = ExecMode::Parallel);

/// Instance check of R·C̃ = R·R on the frame (both (0,6) tensors).
bool r_ctilde_equals_r_r(const GeometryBundle& b, const Tensor& ctilde, const Metric& g,
                         ExecMode mode = ExecMode::Parallel);

}  // namespace curvwb
