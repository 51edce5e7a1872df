#include "curvwb/frame.hpp"

#include <string>

namespace curvwb {

namespace {

void check_brackets(int m, const Tensor& c) {
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k < m; ++k)
        if (c(i, j, k) != -Rational(1) * c(j, i, k))
          throw input_error("bracket antisymmetry fails at c(" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
  // Jacobi: cyclic sum of [e_i,[e_j,e_k]] vanishes componentwise
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k)
        for (int o = 0; o < m; ++o) {
          Rational s;
          for (int l = 0; l < m; ++l) {
            s.add_product(c(j, k, l), c(i, l, o));
            s.add_product(c(k, i, l), c(j, l, o));
            s.add_product(c(i, j, l), c(k, l, o));
          }
          if (!s.is_zero())
            throw input_error("Jacobi identity fails for triple (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
        }
}

}  // namespace

FrameSpec::FrameSpec(int dim_, Tensor brackets_, Metric metric_)
    : dim(dim_), brackets(std::move(brackets_)), metric(std::move(metric_)) {
  if (dim < 2 || dim > 9) throw input_error("frame dimension must be between 2 and 9");
  require_valence(brackets, {Slot::Lower, Slot::Lower, Slot::Upper}, "brackets");
  require_dim(brackets, dim, "brackets");
  if (metric.dim() != dim) throw input_error("metric dimension mismatch");
  check_brackets(dim, brackets);
}

Tensor eta_of(const FrameSpec& frame) {
  if (!frame.contact) throw input_error("frame carries no contact data");
  const int m = frame.dim;
  Tensor eta = Tensor::covec(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) eta(i).add_product(frame.metric(i, j), frame.contact->xi(j));
  return eta;
}

void attach_contact(FrameSpec& frame, Tensor xi, Tensor phi) {
  require_valence(xi, {Slot::Upper}, "contact xi");
  require_dim(xi, frame.dim, "contact xi");
  require_valence(phi, {Slot::Lower, Slot::Upper}, "contact phi");
  require_dim(phi, frame.dim, "contact phi");
  frame.contact = ContactData{std::move(xi), std::move(phi)};
}

void attach_override(FrameSpec& frame, Tensor gamma) {
  require_valence(gamma, {Slot::Lower, Slot::Lower, Slot::Upper}, "connection override");
  require_dim(gamma, frame.dim, "connection override");
  frame.connection_override = std::move(gamma);
}

}  // namespace curvwb
