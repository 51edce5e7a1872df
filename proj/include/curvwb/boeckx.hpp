#pragma once

#include <array>

#include "curvwb/rational.hpp"

namespace curvwb {

/// Boeckx invariant I = (1 − μ/2)/√(1−κ) for κ < 1. The only inexact
/// (floating-point) computation in the system; outputs are approximate.
double boeckx_invariant(const Rational& kappa, const Rational& mu);

struct BoeckxBranch {
  double c;
  double a;  // a = 1 + c
};

/// The two parameter branches c = (√n ± 1)/(n − 1), a = 1 + c, for n ≥ 2.
/// Branch 0 takes the '+' sign.
std::array<BoeckxBranch, 2> boeckx_example_params(int n);

}  // namespace curvwb
