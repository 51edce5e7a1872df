#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvwb/geometry.hpp"
#include "curvwb/tensor_ops.hpp"
#include "test_support.hpp"

using namespace curvwb;
using namespace curvwb::testing;

namespace {

// Independent Ricci oracle: plain contraction loops over R components.
Tensor ricci_by_contraction(const Tensor& R) {
  const int m = R.dim();
  Tensor s = Tensor::form2(m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int a = 0; a < m; ++a) s(x, y) += R(a, x, y, a);
  return s;
}

FrameSpec hyperbolic(int m, const Rational& lam) {
  Tensor c(m, {Slot::Lower, Slot::Lower, Slot::Upper});
  for (int i = 1; i < m; ++i) {
    c(0, i, i) = -Rational(1) * lam;
    c(i, 0, i) = lam;
  }
  return FrameSpec(m, std::move(c), Metric::identity(m));
}

}  // namespace

TEST_CASE("frame validation enforces Jacobi with a witness triple") {
  // {[1,2]=e3, [2,3]=e1, [3,1]=e3} violates Jacobi
  Tensor c = brackets_from(3, {{1, 2, 3}, {2, 3, 1}, {1, 3, 3}},
                           {Rational(1), Rational(1), Rational(-1)});
  try {
    FrameSpec f(3, c, Metric::identity(3));
    FAIL("expected input_error");
  } catch (const input_error& e) {
    CHECK(std::string(e.what()).find("(1,2,3)") != std::string::npos);
  }
}

TEST_CASE("levi_civita on the flat contact frame") {
  const FrameSpec f = example_41();
  const Connection conn = levi_civita(f);
  // nonzero rows: nabla_{e2} e3 = 2 e1, nabla_{e2} e1 = -2 e3
  CHECK(conn.gamma(1, 2, 0) == Rational(2));
  CHECK(conn.gamma(1, 0, 2) == Rational(-2));
  int nonzero = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (!conn.gamma(i, j, k).is_zero()) ++nonzero;
  CHECK(nonzero == 2);
  // all nabla_{e1} and nabla_{e3} rows vanish
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      CHECK(conn.gamma(0, j, k).is_zero());
      CHECK(conn.gamma(2, j, k).is_zero());
    }
}

TEST_CASE("levi_civita on an abelian frame vanishes") {
  FrameSpec f(4, Tensor(4, {Slot::Lower, Slot::Lower, Slot::Upper}), Metric::identity(4));
  CHECK(levi_civita(f).gamma.is_zero());
}

TEST_CASE("levi_civita on the cyclic su2 frame") {
  const FrameSpec f = su2_sasakian();
  const Connection conn = levi_civita(f);
  CHECK(conn.gamma(0, 1, 2) == Rational(1));   // nabla_{e1} e2 = e3
  CHECK(conn.gamma(1, 2, 0) == Rational(1));   // nabla_{e2} e3 = e1
  CHECK(conn.gamma(2, 1, 0) == Rational(-1));  // nabla_{e3} e2 = -e1
}

TEST_CASE("riemann on the flat contact frame vanishes") {
  const FrameSpec f = example_41();
  const Tensor R = riemann(f, levi_civita(f));
  // the three componentwise checks, then full flatness
  for (int o = 0; o < 3; ++o) {
    CHECK(R(1, 2, 2, o).is_zero());
    CHECK(R(1, 0, 2, o).is_zero());
    CHECK(R(0, 2, 2, o).is_zero());
  }
  CHECK(R.is_zero());
}

TEST_CASE("ricci package on su2: S = 2g, r = 6, S2 = 4g, and Eq invariants") {
  const FrameSpec f = su2_sasakian();
  const GeometryBundle b = make_geometry(f);
  const Tensor oracle = ricci_by_contraction(b.R);
  CHECK(b.S == oracle);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(b.S(i, j) == Rational(2) * f.metric(i, j));
      CHECK(b.S2(i, j) == Rational(4) * f.metric(i, j));
    }
  CHECK(b.r == Rational(6));
  // g(QX, Y) = S(X,Y) and S2(X,Y) = S(QX,Y)
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      Rational gq, sq;
      for (int k = 0; k < 3; ++k) {
        gq.add_product(b.Q_op(x, k), f.metric(k, y));
        sq.add_product(b.Q_op(x, k), b.S(k, y));
      }
      REQUIRE(gq == b.S(x, y));
      REQUIRE(sq == b.S2(x, y));
    }
  // r = tr Q
  Rational tr;
  for (int i = 0; i < 3; ++i) tr += b.Q_op(i, i);
  CHECK(tr == b.r);
}

TEST_CASE("ricci package on flat and hyperbolic frames") {
  FrameSpec flat(5, Tensor(5, {Slot::Lower, Slot::Lower, Slot::Upper}), Metric::identity(5));
  const GeometryBundle bf = make_geometry(flat);
  CHECK(bf.S.is_zero());
  CHECK(bf.S2.is_zero());
  CHECK(bf.r == Rational(0));

  const FrameSpec h = hyperbolic(3, Rational(1));
  const GeometryBundle bh = make_geometry(h);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(bh.S(i, j) == Rational(-2) * h.metric(i, j));
  CHECK(bh.r == Rational(-6));
}

TEST_CASE("constant curvature fits") {
  CHECK(*constant_curvature_fit(make_geometry(su2_sasakian()).R, Metric::identity(3)).c ==
        Rational(1));
  CHECK(*constant_curvature_fit(make_geometry(example_41()).R, Metric::identity(3)).c ==
        Rational(0));
  const FrameSpec h = hyperbolic(3, Rational(1));
  CHECK(*constant_curvature_fit(make_geometry(h).R, h.metric).c == Rational(-1));
  // no-fit carries a witness
  const FrameSpec f42 = hyperbolic(5, Rational(2));
  GeometryBundle b = make_geometry(f42);
  Tensor broken = b.R;
  broken(0, 1, 1, 0) += Rational(1);
  const auto fit = constant_curvature_fit(broken, f42.metric);
  CHECK(!fit.c);
  CHECK(fit.witness.has_value());
}

TEST_CASE("connection oracle properties on random Jacobi-filtered frames") {
  std::mt19937_64 rng(2024);
  int done = 0;
  while (done < 60) {
    const int m = 3 + static_cast<int>(rng() % 4);  // dims 3..6
    Tensor c = random_jacobi_brackets(m, rng);
    const Metric g = (done % 3 == 0) ? random_metric(m, rng) : Metric::identity(m);
    FrameSpec f(m, std::move(c), g);
    const Connection conn = levi_civita(f);
    const ConnectionCheck cc = check_connection(f, conn);
    REQUIRE(cc.torsion_free);
    REQUIRE(cc.metric_compatible);
    const GeometryBundle b = make_geometry(f);
    // first Bianchi
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k)
          for (int o = 0; o < m; ++o) {
            Rational s = b.R(i, j, k, o) + b.R(j, k, i, o) + b.R(k, i, j, o);
            REQUIRE(s.is_zero());
          }
    // R_low symmetries
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k)
          for (int o = 0; o < m; ++o) {
            REQUIRE(b.R_low(i, j, k, o) == -Rational(1) * b.R_low(j, i, k, o));
            REQUIRE(b.R_low(i, j, k, o) == -Rational(1) * b.R_low(i, j, o, k));
            REQUIRE(b.R_low(i, j, k, o) == b.R_low(k, o, i, j));
          }
    // Ricci symmetry and the bundle contracts g(QX,Y) = S(X,Y), S2 = S(Q.,.)
    Rational trq;
    for (int i = 0; i < m; ++i) {
      trq += b.Q_op(i, i);
      for (int j = 0; j < m; ++j) {
        REQUIRE(b.S(i, j) == b.S(j, i));
        Rational gq, sq;
        for (int k = 0; k < m; ++k) {
          gq.add_product(b.Q_op(i, k), g(k, j));
          sq.add_product(b.Q_op(i, k), b.S(k, j));
        }
        REQUIRE(gq == b.S(i, j));
        REQUIRE(sq == b.S2(i, j));
      }
    }
    REQUIRE(trq == b.r);
    ++done;
  }
}

TEST_CASE("override curvature on the 5-dim example keeps R(e1,e2)e2 = -lambda^2 e1") {
  // the one printed family that survives under the published table as well
  Tensor c = brackets_from(5, {{1, 2, 2}, {1, 3, 3}}, {Rational(-1), Rational(-1)});
  FrameSpec f(5, std::move(c), Metric::identity(5));
  Tensor gamma(5, {Slot::Lower, Slot::Lower, Slot::Upper});
  const Rational half(1, 2);
  gamma(0, 4, 0) = Rational(1);
  gamma(1, 0, 3) = Rational(-1);
  gamma(1, 0, 1) = half;
  gamma(1, 1, 0) = Rational(-1);
  gamma(2, 0, 4) = Rational(-1);
  gamma(2, 0, 2) = half;
  gamma(2, 2, 0) = Rational(-1);
  gamma(3, 0, 1) = Rational(1);
  gamma(3, 0, 3) = -half;
  gamma(4, 0, 2) = Rational(1);
  gamma(4, 0, 4) = -half;
  attach_override(f, gamma);
  f.use_override = true;
  const GeometryBundle b = make_geometry(f);
  CHECK(b.R(0, 1, 1, 0) == Rational(-1));
  for (int o = 1; o < 5; ++o) CHECK(b.R(0, 1, 1, o).is_zero());
}

TEST_CASE("connection override replaces Koszul output and is diagnosed") {
  FrameSpec f = example_41();
  Tensor gamma(3, {Slot::Lower, Slot::Lower, Slot::Upper});
  gamma(0, 0, 1) = Rational(1);  // torsioned, non-compatible junk table
  attach_override(f, gamma);
  f.use_override = true;
  const GeometryBundle b = make_geometry(f);
  CHECK(b.conn.gamma == gamma);
  const ConnectionCheck cc = check_connection(f, b.conn);
  CHECK(!cc.torsion_free);
  CHECK(!cc.metric_compatible);
}
