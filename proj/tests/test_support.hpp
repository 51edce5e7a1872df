#pragma once

#include <random>
#include <vector>

#include "curvwb/frame.hpp"
#include "curvwb/geometry.hpp"

namespace curvwb::testing {

/// Brackets from sparse 1-based entries {(i,j,k,coeff)} with i<j; the
/// antisymmetric completion is applied.
inline Tensor brackets_from(int m, const std::vector<std::array<int, 3>>& where,
                            const std::vector<Rational>& coeff) {
  Tensor c(m, {Slot::Lower, Slot::Lower, Slot::Upper});
  for (std::size_t s = 0; s < where.size(); ++s) {
    const auto [i, j, k] = where[s];
    c(i - 1, j - 1, k - 1) += coeff[s];
    c(j - 1, i - 1, k - 1) -= coeff[s];
  }
  return c;
}

inline FrameSpec su2_sasakian() {
  FrameSpec f(3,
              brackets_from(3, {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}},
                            {Rational(2), Rational(2), Rational(2)}),
              Metric::identity(3));
  Tensor xi = Tensor::basis_vec(3, 2);
  Tensor phi = Tensor::endo(3);
  phi(0, 1) = Rational(1);
  phi(1, 0) = Rational(-1);
  attach_contact(f, std::move(xi), std::move(phi));
  return f;
}

inline FrameSpec example_41() {
  FrameSpec f(3, brackets_from(3, {{1, 2, 3}, {2, 3, 1}}, {Rational(2), Rational(2)}),
              Metric::identity(3));
  Tensor xi = Tensor::basis_vec(3, 2);
  Tensor phi = Tensor::endo(3);
  phi(0, 1) = Rational(1);
  phi(1, 0) = Rational(-1);
  attach_contact(f, std::move(xi), std::move(phi));
  return f;
}

/// Random small rationals p/q with p in [-4,4], q in {1,2}.
inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 2);
  return Rational(num(rng), den(rng));
}

/// Random symmetric (0,2) tensor.
inline Tensor random_symmetric(int m, std::mt19937_64& rng) {
  Tensor a = Tensor::form2(m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      a(i, j) = random_rational(rng);
      a(j, i) = a(i, j);
    }
  return a;
}

/// Random SPD metric via L D Lᵀ with unit lower-triangular L and positive D.
inline Metric random_metric(int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> small(-1, 1);
  std::uniform_int_distribution<int> dpos(1, 3);
  std::vector<std::vector<Rational>> l(static_cast<std::size_t>(m),
                                       std::vector<Rational>(static_cast<std::size_t>(m)));
  std::vector<Rational> d(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    l[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Rational(1);
    for (int j = 0; j < i; ++j)
      l[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rational(small(rng), 2);
    d[static_cast<std::size_t>(i)] = Rational(dpos(rng));
  }
  Tensor g = Tensor::form2(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Rational t;
      for (int k = 0; k < m; ++k) {
        Rational f = l[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                     d[static_cast<std::size_t>(k)];
        t.add_product(f, l[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]);
      }
      g(i, j) = std::move(t);
    }
  return Metric::make(std::move(g));
}

/// Random brackets with small integer coefficients that satisfy Jacobi;
/// retries until a valid (possibly abelian) table appears.
inline Tensor random_jacobi_brackets(int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> pick(0, m - 1);
  std::uniform_int_distribution<int> count(0, 3);
  for (;;) {
    Tensor c(m, {Slot::Lower, Slot::Lower, Slot::Upper});
    const int entries = count(rng);
    for (int e = 0; e < entries; ++e) {
      int i = pick(rng), j = pick(rng), k = pick(rng);
      if (i == j) continue;
      if (i > j) std::swap(i, j);
      const Rational v(coeff(rng));
      c(i, j, k) = v;
      c(j, i, k) = -v;
    }
    try {
      FrameSpec probe(m, c, Metric::identity(m));
      return c;
    } catch (const input_error&) {
      continue;
    }
  }
}

}  // namespace curvwb::testing
