#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvwb/kernels.hpp"
#include "curvwb/tensor_ops.hpp"
#include "test_support.hpp"

using namespace curvwb;
using curvwb::testing::random_metric;
using curvwb::testing::random_symmetric;

namespace {

Tensor eta_outer(const Tensor& eta) {
  const int m = eta.dim();
  Tensor a = Tensor::form2(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a(i, j) = eta(i) * eta(j);
  return a;
}

}  // namespace

TEST_CASE("wedge_apply on an orthonormal frame") {
  const Metric g = Metric::identity(3);
  const Tensor e1 = Tensor::basis_vec(3, 0), e2 = Tensor::basis_vec(3, 1),
               e3 = Tensor::basis_vec(3, 2);
  CHECK(wedge_apply(e1, e2, e2, g) == e1);
  CHECK(wedge_apply(e1, e2, e3, g).is_zero());
  CHECK(wedge_apply(e1, e1, e3, g).is_zero());
  CHECK(wedge_apply(e1, e1, e1, g).is_zero());
}

TEST_CASE("wedge_apply rejects dimension mismatches") {
  const Metric g = Metric::identity(3);
  CHECK_THROWS_AS(wedge_apply(Tensor::basis_vec(4, 0), Tensor::basis_vec(3, 1),
                              Tensor::basis_vec(3, 1), g),
                  input_error);
}

TEST_CASE("kulkarni_nomizu entries") {
  const Metric g = Metric::identity(3);
  const Tensor gg = kulkarni_nomizu(g, g.g());
  CHECK(gg(0, 1, 1, 0) == Rational(2));
  Tensor eta = Tensor::covec(3);
  eta(0) = Rational(1);  // xi = e1, orthonormal
  const Tensor t = kulkarni_nomizu(g, eta_outer(eta));
  CHECK(t(0, 1, 1, 0) == Rational(1));
}

TEST_CASE("kulkarni_nomizu rejects non-symmetric input") {
  const Metric g = Metric::identity(3);
  Tensor a = Tensor::form2(3);
  a(0, 1) = Rational(1);
  CHECK_THROWS_AS(kulkarni_nomizu(g, a), input_error);
}

TEST_CASE("kulkarni_nomizu has full curvature symmetries on random symmetric input") {
  std::mt19937_64 rng(42);
  for (int m = 3; m <= 7; ++m) {
    const Metric g = random_metric(m, rng);
    const Tensor a = random_symmetric(m, rng);
    const Tensor t = kulkarni_nomizu(g, a);
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        for (int z = 0; z < m; ++z)
          for (int w = 0; w < m; ++w) {
            REQUIRE(t(x, y, z, w) == -Rational(1) * t(y, x, z, w));
            REQUIRE(t(x, y, z, w) == -Rational(1) * t(x, y, w, z));
            REQUIRE(t(x, y, z, w) == t(z, w, x, y));
          }
  }
}

TEST_CASE("q_tensor of the metric vanishes") {
  std::mt19937_64 rng(5);
  for (int m = 3; m <= 5; ++m) {
    const Metric g = random_metric(m, rng);
    CHECK(q_full(g, g.g()).is_zero());
  }
}

TEST_CASE("q_tensor of eta x eta reproduces the hand value") {
  const Metric g = Metric::identity(3);
  Tensor eta = Tensor::covec(3);
  eta(0) = Rational(1);
  const Tensor q = q_full(g, eta_outer(eta));
  // entry (Z,W;X,Y) = (e2,e1;e1,e2)
  CHECK(q(1, 0, 0, 1) == Rational(-1));
}

TEST_CASE("q_tensor is antisymmetric in its wedge pair") {
  std::mt19937_64 rng(9);
  const int m = 4;
  const Metric g = random_metric(m, rng);
  const Tensor a = random_symmetric(m, rng);
  const Tensor q = q_full(g, a);
  for (int z1 = 0; z1 < m; ++z1)
    for (int z2 = 0; z2 < m; ++z2)
      for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v)
          REQUIRE(q(z1, z2, u, v) == -Rational(1) * q(z1, z2, v, u));
}

TEST_CASE("derivation_action is antisymmetric in (u,v) for antisymmetric families") {
  std::mt19937_64 rng(13);
  const int m = 4;
  Tensor a = Tensor::curv(m);
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v)
      for (int x = 0; x < m; ++x)
        for (int o = 0; o < m; ++o) {
          a(u, v, x, o) = curvwb::testing::random_rational(rng);
          a(v, u, x, o) = -Rational(1) * a(u, v, x, o);
        }
  const Tensor t = random_symmetric(m, rng);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) {
      const Tensor duv = derivation_action(a, u, v, t);
      const Tensor dvu = derivation_action(a, v, u, t);
      Tensor sum = duv;
      sum += dvu;
      REQUIRE(sum.is_zero());
    }
}

TEST_CASE("g * g_inv is the identity, exactly, on random SPD metrics") {
  std::mt19937_64 rng(21);
  for (int m = 2; m <= 7; ++m)
    for (int t = 0; t < 5; ++t) {
      const Metric g = random_metric(m, rng);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          Rational s;
          for (int k = 0; k < m; ++k) s.add_product(g(i, k), g.inv(k, j));
          REQUIRE(s == Rational(i == j ? 1 : 0));
        }
    }
}

TEST_CASE("metric validation rejects bad input") {
  Tensor g = Tensor::form2(2);
  g(0, 0) = Rational(1);
  g(0, 1) = Rational(2);
  g(1, 0) = Rational(2);
  g(1, 1) = Rational(1);
  CHECK_THROWS_AS(Metric::make(g), input_error);  // det = -3
  Tensor ns = Tensor::form2(2);
  ns(0, 0) = Rational(1);
  ns(0, 1) = Rational(1);
  CHECK_THROWS_AS(Metric::make(ns), input_error);  // not symmetric
}

TEST_CASE("tensor addition and scaling commute with index bookkeeping") {
  std::mt19937_64 rng(31);
  const int m = 3;
  Tensor a = random_symmetric(m, rng), b = random_symmetric(m, rng);
  Tensor s = a + b;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) REQUIRE(s(i, j) == a(i, j) + b(i, j));
  Tensor sc = Rational(3, 2) * a;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) REQUIRE(sc(i, j) == Rational(3, 2) * a(i, j));
}

TEST_CASE("parallel and serial batch kernels agree bit-for-bit") {
  std::mt19937_64 rng(77);
  for (int m = 3; m <= 5; ++m) {
    const Metric g = random_metric(m, rng);
    const Tensor a = random_symmetric(m, rng);
    const Tensor t4 = kulkarni_nomizu(g, a);
    Tensor fam = Tensor::curv(m);
    for (int u = 0; u < m; ++u)
      for (int v = 0; v < m; ++v)
        for (int x = 0; x < m; ++x)
          for (int o = 0; o < m; ++o) fam(u, v, x, o) = curvwb::testing::random_rational(rng);
    CHECK(derivation_full_serial(fam, t4) == derivation_full_parallel(fam, t4));
    CHECK(q_full(g, t4, ExecMode::Serial) == q_full(g, t4, ExecMode::Parallel));
  }
}

TEST_CASE("derivation of the metric by a curvature family vanishes") {
  // any g-skew family annihilates g; the wedge family is g-skew
  std::mt19937_64 rng(83);
  const Metric g = random_metric(4, rng);
  CHECK(q_full(g, g.g()).is_zero());
}
