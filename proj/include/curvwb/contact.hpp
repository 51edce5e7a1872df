#pragma once

#include <string>
#include <vector>

#include "curvwb/geometry.hpp"

namespace curvwb {

struct NamedCheck {
  std::string id;
  bool holds = true;
  std::vector<int> witness;  // 1-based indices, empty when the check holds
};

struct AxiomReport {
  std::vector<NamedCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.holds) return false;
    return true;
  }
};

/// The contact-metric axioms, each evaluated entrywise:
///   eta(xi) = 1;  phi xi = 0;  eta∘phi = 0;  phi² = −I + η⊗ξ;
///   g(φX,φY) = g(X,Y) − η(X)η(Y);  dη(X,Y) = g(X,φY)
/// with dη(X,Y) = ½(Xη(Y) − Yη(X) − η([X,Y])) = −½ η([X,Y]) on a frame
/// with constant components.
AxiomReport check_contact_axioms(const FrameSpec& frame);

/// dη(e_i, e_j) under the ½ convention above.
Rational d_eta(const FrameSpec& frame, int i, int j);

/// h = ½ L_ξ φ from the definition: hX = ½([ξ, φX] − φ[ξ, X]).
Tensor compute_h(const FrameSpec& frame);

/// hξ = 0, hφ = −φh, tr h = tr φh = 0, g-symmetry of h, and the contact
/// law ∇_X ξ = −φX − φhX, all entrywise.
AxiomReport check_h_identities(const FrameSpec& frame, const Tensor& h, const Connection& conn);

struct SasakiReport {
  bool sasakian = true;
  std::vector<int> sasakian_witness;
  bool k_contact = true;
  std::vector<int> k_contact_witness;
};

/// Sasakian: R(X,Y)ξ = η(Y)X − η(X)Y. K-contact: L_ξ g = 0, via
/// g(∇_X ξ, Y) + g(X, ∇_Y ξ) = 0.
SasakiReport sasakian_and_kcontact(const FrameSpec& frame, const GeometryBundle& bundle);

}  // namespace curvwb
