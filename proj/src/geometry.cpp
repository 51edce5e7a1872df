#include "curvwb/geometry.hpp"

#include "curvwb/tensor_ops.hpp"

namespace curvwb {

Connection levi_civita(const FrameSpec& frame) {
  const int m = frame.dim;
  const Tensor& c = frame.brackets;
  const Metric& g = frame.metric;
  // K(i,j,l) = 2 g(nabla_i e_j, e_l)
  Tensor K(m, {Slot::Lower, Slot::Lower, Slot::Lower});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int l = 0; l < m; ++l) {
        Rational& t = K(i, j, l);
        for (int a = 0; a < m; ++a) {
          t.subtract_product(c(j, l, a), g(i, a));
          t.subtract_product(c(i, l, a), g(j, a));
          t.add_product(c(i, j, a), g(l, a));
        }
      }
  Connection conn{Tensor(m, {Slot::Lower, Slot::Lower, Slot::Upper})};
  const Rational half(1, 2);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        Rational t;
        for (int l = 0; l < m; ++l) t.add_product(K(i, j, l), g.inv(l, k));
        conn.gamma(i, j, k) = half * t;
      }
  return conn;
}

ConnectionCheck check_connection(const FrameSpec& frame, const Connection& conn) {
  const int m = frame.dim;
  const Tensor& ga = conn.gamma;
  ConnectionCheck out;
  for (int i = 0; i < m && out.torsion_free; ++i)
    for (int j = 0; j < m && out.torsion_free; ++j)
      for (int k = 0; k < m; ++k)
        if (ga(i, j, k) - ga(j, i, k) != frame.brackets(i, j, k)) {
          out.torsion_free = false;
          out.torsion_witness = {i + 1, j + 1, k + 1};
          break;
        }
  // constant metric: 0 = g(nabla_i e_j, e_k) + g(e_j, nabla_i e_k)
  for (int i = 0; i < m && out.metric_compatible; ++i)
    for (int j = 0; j < m && out.metric_compatible; ++j)
      for (int k = 0; k < m; ++k) {
        Rational s;
        for (int a = 0; a < m; ++a) {
          s.add_product(ga(i, j, a), frame.metric(a, k));
          s.add_product(ga(i, k, a), frame.metric(a, j));
        }
        if (!s.is_zero()) {
          out.metric_compatible = false;
          out.compat_witness = {j + 1, k + 1};
          break;
        }
      }
  return out;
}

Tensor riemann(const FrameSpec& frame, const Connection& conn) {
  const int m = frame.dim;
  const Tensor& ga = conn.gamma;
  const Tensor& c = frame.brackets;
  Tensor R = Tensor::curv(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int o = 0; o < m; ++o) {
          Rational& t = R(i, j, k, o);
          for (int l = 0; l < m; ++l) {
            t.add_product(ga(j, k, l), ga(i, l, o));
            t.subtract_product(ga(i, k, l), ga(j, l, o));
            t.subtract_product(c(i, j, l), ga(l, k, o));
          }
        }
  return R;
}

GeometryBundle ricci_package(const FrameSpec& frame, Connection conn, Tensor R) {
  const int m = frame.dim;
  const Metric& g = frame.metric;
  Tensor S = Tensor::form2(m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      Rational t;
      for (int a = 0; a < m; ++a) t += R(a, x, y, a);
      S(x, y) = std::move(t);
    }
  Tensor Q = raise_last(S, g);
  Tensor S2 = Tensor::form2(m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      Rational t;
      for (int k = 0; k < m; ++k) t.add_product(Q(x, k), S(k, y));
      S2(x, y) = std::move(t);
    }
  Rational r;
  for (int i = 0; i < m; ++i) r += Q(i, i);
  Tensor R_low = lower_last(R, g);
  return GeometryBundle{std::move(conn), std::move(R), std::move(R_low),
                        std::move(S),    std::move(Q), std::move(S2),   std::move(r)};
}

GeometryBundle make_geometry(const FrameSpec& frame) {
  Connection conn = frame.use_override && frame.connection_override
                        ? Connection{*frame.connection_override}
                        : levi_civita(frame);
  Tensor R = riemann(frame, conn);
  return ricci_package(frame, std::move(conn), std::move(R));
}

ConstCurvatureFit constant_curvature_fit(const Tensor& R, const Metric& g) {
  const int m = R.dim();
  ConstCurvatureFit fit;
  std::optional<Rational> c;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int o = 0; o < m; ++o) {
          Rational w = (i == o ? g(j, k) : Rational(0)) - (j == o ? g(i, k) : Rational(0));
          if (w.is_zero()) {
            if (!R(i, j, k, o).is_zero()) {
              fit.witness = {i + 1, j + 1, k + 1, o + 1};
              fit.residual = R(i, j, k, o);
              return fit;
            }
            continue;
          }
          const Rational cand = R(i, j, k, o) / w;
          if (!c) {
            c = cand;
          } else if (cand != *c) {
            fit.witness = {i + 1, j + 1, k + 1, o + 1};
            fit.residual = R(i, j, k, o) - *c * w;
            return fit;
          }
        }
  fit.c = c ? *c : Rational(0);
  return fit;
}

}  // namespace curvwb
