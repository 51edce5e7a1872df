#include "curvwb/metric.hpp"

#include <string>
#include <vector>

namespace curvwb {

namespace {

// Determinant of the leading k x k block, exact Gaussian elimination.
Rational leading_minor(const Tensor& g, int k) {
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    a[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g(i, j);
  }
  Rational det(1);
  for (int col = 0; col < k; ++col) {
    int piv = -1;
    for (int r = col; r < k; ++r)
      if (!a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) { piv = r; break; }
    if (piv < 0) return Rational(0);
    if (piv != col) {
      std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(col)]);
      det = -det;
    }
    const Rational p = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    det *= p;
    for (int r = col + 1; r < k; ++r) {
      const Rational f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / p;
      if (f.is_zero()) continue;
      for (int c = col; c < k; ++c)
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].subtract_product(
            f, a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)]);
    }
  }
  return det;
}

Tensor invert(const Tensor& g) {
  const int m = g.dim();
  const std::size_t n = static_cast<std::size_t>(m);
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g(i, j);
    a[static_cast<std::size_t>(i)][n + static_cast<std::size_t>(i)] = Rational(1);
  }
  for (int col = 0; col < m; ++col) {
    int piv = -1;
    for (int r = col; r < m; ++r)
      if (!a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) { piv = r; break; }
    if (piv < 0) throw input_error("metric is singular");
    std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(col)]);
    const Rational p = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    for (auto& x : a[static_cast<std::size_t>(col)]) x /= p;
    for (int r = 0; r < m; ++r) {
      if (r == col) continue;
      const Rational f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (f.is_zero()) continue;
      for (std::size_t c = 0; c < 2 * n; ++c)
        a[static_cast<std::size_t>(r)][c].subtract_product(f, a[static_cast<std::size_t>(col)][c]);
    }
  }
  Tensor inv(m, {Slot::Upper, Slot::Upper});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) inv(i, j) = a[static_cast<std::size_t>(i)][n + static_cast<std::size_t>(j)];
  return inv;
}

}  // namespace

Metric Metric::make(Tensor g) {
  if (g.order() != 2 || g.valence()[0] != Slot::Lower || g.valence()[1] != Slot::Lower)
    throw input_error("metric must be a (0,2) tensor");
  const int m = g.dim();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g(i, j) != g(j, i))
        throw input_error("metric is not symmetric at entry (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ")");
  for (int k = 1; k <= m; ++k)
    if (leading_minor(g, k).sign() <= 0)
      throw input_error("metric is not positive definite (leading minor " + std::to_string(k) +
                        " is not positive)");
  Tensor inv = invert(g);
  return Metric(std::move(g), std::move(inv));
}

Metric Metric::identity(int dim) {
  Tensor g = Tensor::form2(dim);
  for (int i = 0; i < dim; ++i) g(i, i) = Rational(1);
  Tensor inv(dim, {Slot::Upper, Slot::Upper});
  for (int i = 0; i < dim; ++i) inv(i, i) = Rational(1);
  return Metric(std::move(g), std::move(inv));
}

bool Metric::is_identity() const {
  const int m = dim();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (g_(i, j) != Rational(i == j ? 1 : 0)) return false;
  return true;
}

}  // namespace curvwb
