#include "curvwb/boeckx.hpp"

#include <cmath>

namespace curvwb {

double boeckx_invariant(const Rational& kappa, const Rational& mu) {
  if (kappa >= Rational(1))
    throw input_error("Boeckx invariant needs kappa < 1 (Sasakian boundary)");
  const double k = kappa.to_double();
  const double m = mu.to_double();
  return (1.0 - m / 2.0) / std::sqrt(1.0 - k);
}

std::array<BoeckxBranch, 2> boeckx_example_params(int n) {
  if (n < 2) throw input_error("boeckx_example_params needs n >= 2");
  const double sq = std::sqrt(static_cast<double>(n));
  const double cp = (sq + 1.0) / (n - 1);
  const double cm = (sq - 1.0) / (n - 1);
  return {BoeckxBranch{cp, 1.0 + cp}, BoeckxBranch{cm, 1.0 + cm}};
}

}  // namespace curvwb
