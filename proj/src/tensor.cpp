#include "curvwb/tensor.hpp"

#include <cassert>
#include <string>

namespace curvwb {

namespace {
std::size_t pow_size(int dim, int order) {
  std::size_t n = 1;
  for (int s = 0; s < order; ++s) n *= static_cast<std::size_t>(dim);
  return n;
}
}  // namespace

Tensor::Tensor(int dim, std::vector<Slot> valence)
    : dim_(dim), valence_(std::move(valence)),
      data_(pow_size(dim, static_cast<int>(valence_.size()))) {
  if (dim < 1) throw input_error("tensor dimension must be positive");
}

std::size_t Tensor::flat(std::span<const int> idx) const {
  assert(idx.size() == valence_.size());
  std::size_t f = 0;
  for (int v : idx) {
    assert(v >= 0 && v < dim_);
    f = f * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(v);
  }
  return f;
}

std::size_t Tensor::stride(int s) const {
  return pow_size(dim_, order() - 1 - s);
}

bool Tensor::is_zero() const {
  for (const Rational& q : data_)
    if (!q.is_zero()) return false;
  return true;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (!same_shape(o)) throw input_error("tensor addition: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  if (!same_shape(o)) throw input_error("tensor subtraction: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Tensor& Tensor::scale(const Rational& c) {
  for (Rational& q : data_) q *= c;
  return *this;
}

Tensor Tensor::basis_vec(int dim, int i) {
  Tensor e = vec(dim);
  e(i) = Rational(1);
  return e;
}

void require_valence(const Tensor& t, const std::vector<Slot>& expected, const char* what) {
  if (t.valence() != expected)
    throw input_error(std::string(what) + ": valence mismatch");
}

void require_dim(const Tensor& t, int dim, const char* what) {
  if (t.dim() != dim)
    throw input_error(std::string(what) + ": dimension mismatch (" +
                      std::to_string(t.dim()) + " vs " + std::to_string(dim) + ")");
}

}  // namespace curvwb
