#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "curvwb/rational.hpp"

namespace curvwb {

enum class Slot : std::uint8_t { Upper, Lower };

/// Dense multi-index array of exact rationals over a fixed frame.
/// One frame index per slot, each in [0, dim). Slot kinds are fixed at
/// construction; operations check them. Indices are 0-based inside the
/// library and 1-based in every user-facing surface.
class Tensor {
public:
  Tensor(int dim, std::vector<Slot> valence);

  int dim() const { return dim_; }
  int order() const { return static_cast<int>(valence_.size()); }
  const std::vector<Slot>& valence() const { return valence_; }
  std::size_t size() const { return data_.size(); }

  std::size_t flat(std::span<const int> idx) const;
  /// Stride of slot s in the flat layout (last slot has stride 1).
  std::size_t stride(int s) const;

  const Rational& at(std::span<const int> idx) const { return data_[flat(idx)]; }
  Rational& at(std::span<const int> idx) { return data_[flat(idx)]; }

  template <class... I>
  const Rational& operator()(I... idx) const {
    const int ii[] = {static_cast<int>(idx)...};
    return at(std::span<const int>(ii, sizeof...(idx)));
  }
  template <class... I>
  Rational& operator()(I... idx) {
    const int ii[] = {static_cast<int>(idx)...};
    return at(std::span<const int>(ii, sizeof...(idx)));
  }

  const Rational* data() const { return data_.data(); }
  Rational* data() { return data_.data(); }
  const Rational& flat_at(std::size_t f) const { return data_[f]; }
  Rational& flat_at(std::size_t f) { return data_[f]; }

  bool is_zero() const;
  bool same_shape(const Tensor& o) const { return dim_ == o.dim_ && valence_ == o.valence_; }

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& scale(const Rational& c);

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Rational& c, Tensor t) { return t.scale(c); }
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.dim_ == b.dim_ && a.valence_ == b.valence_ && a.data_ == b.data_;
  }

  // common shapes
  static Tensor vec(int dim) { return Tensor(dim, {Slot::Upper}); }
  static Tensor covec(int dim) { return Tensor(dim, {Slot::Lower}); }
  static Tensor endo(int dim) { return Tensor(dim, {Slot::Lower, Slot::Upper}); }
  static Tensor form2(int dim) { return Tensor(dim, {Slot::Lower, Slot::Lower}); }
  static Tensor curv(int dim) {
    return Tensor(dim, {Slot::Lower, Slot::Lower, Slot::Lower, Slot::Upper});
  }
  static Tensor cov(int dim, int order) {
    return Tensor(dim, std::vector<Slot>(static_cast<std::size_t>(order), Slot::Lower));
  }
  static Tensor basis_vec(int dim, int i);

private:
  int dim_;
  std::vector<Slot> valence_;
  std::vector<Rational> data_;
};

/// Odometer over all index tuples {0..dim-1}^order in row-major order.
struct MultiIndex {
  MultiIndex(int dim, int order) : idx(static_cast<std::size_t>(order), 0), dim_(dim) {}
  std::vector<int> idx;
  bool advance() {
    for (int s = static_cast<int>(idx.size()) - 1; s >= 0; --s) {
      if (++idx[static_cast<std::size_t>(s)] < dim_) return true;
      idx[static_cast<std::size_t>(s)] = 0;
    }
    return false;
  }

private:
  int dim_;
};

void require_valence(const Tensor& t, const std::vector<Slot>& expected, const char* what);
void require_dim(const Tensor& t, int dim, const char* what);

}  // namespace curvwb
