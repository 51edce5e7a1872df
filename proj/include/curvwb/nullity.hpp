#pragma once

#include <map>
#include <optional>

#include "curvwb/contact.hpp"
#include "curvwb/geometry.hpp"

namespace curvwb {

/// Concircular tensor: R − r/(m(m−1)) · ∧_g, as a (1,3) tensor.
Tensor concircular(const Tensor& R, const Rational& r, const Metric& g);

/// Weyl conformal tensor (1,3); rejects m < 3.
Tensor weyl(const GeometryBundle& b, const Metric& g);

struct NullityFit {
  bool global_fit = false;
  std::optional<Rational> kappa;
  std::optional<Rational> mu;  // absent when indeterminate (h = 0) or no fit
  bool mu_indeterminate = false;
  std::map<int, std::optional<Rational>> per_pair;  // 1-based index i for the pair (e_i, ξ)
  std::vector<int> witness;                         // 1-based (i,j,o), set when no global fit
};

/// Exact overdetermined solve of
///   R(e_i,e_j)ξ = κ [η(e_j)e_i − η(e_i)e_j] + μ [η(e_j)h e_i − η(e_i)h e_j]
/// over all pairs. μ is reported indeterminate when its coefficient column
/// vanishes identically (h = 0).
NullityFit fit_kappa_mu(const FrameSpec& frame, const GeometryBundle& b, const Tensor& h);

enum class IdentityStatus { Pass, Fail, OutOfHypothesis };

struct IdentityResult {
  std::string id;
  IdentityStatus status = IdentityStatus::Pass;
  std::vector<int> witness;  // 1-based, set on Fail / OutOfHypothesis
};

/// The κ-nullity identity suite, each relation evaluated entrywise with the
/// fitted κ. Relations whose derivation needs n > 1 and a non-Sasakian
/// structure are tagged OutOfHypothesis instead of Fail outside that range.
std::vector<IdentityResult> identity_suite(const FrameSpec& frame, const GeometryBundle& b,
                                           const Tensor& h, const NullityFit& fit);

struct EtaEinsteinFit {
  Rational c1, c2;
  bool exact = false;
  std::vector<int> witness;  // 1-based pair, set when not exact
  // cross-checks, meaningful when a global kappa fit was supplied
  std::optional<bool> closed_form_match;  // c1 = r/2n − κ, c2 = (2n+1)κ − r/2n
  std::optional<bool> trace_r_ok;         // r = (2n+1)c1 + c2
  std::optional<bool> trace_kappa_ok;     // 2nκ = c1 + c2
};

/// Exact solve of S = c1 g + c2 η⊗η from the first independent entries,
/// verified against every entry.
EtaEinsteinFit eta_einstein_fit(const Tensor& S, const Metric& g, const Tensor& eta,
                                const std::optional<Rational>& kappa = std::nullopt,
                                const std::optional<Rational>& r = std::nullopt, int n = 0);

/// S = (r/m) g exactly.
bool is_einstein(const Tensor& S, const Metric& g, const Rational& r);

}  // namespace curvwb
