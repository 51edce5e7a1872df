#include "curvwb/tensor_ops.hpp"

#include <string>

namespace curvwb {

Rational inner(const Metric& g, const Tensor& v, const Tensor& w) {
  const int m = g.dim();
  require_dim(v, m, "inner");
  require_dim(w, m, "inner");
  Rational s;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (v(i).is_zero() || g(i, j).is_zero()) continue;
      Rational t = v(i) * g(i, j);
      s.add_product(t, w(j));
    }
  return s;
}

Tensor wedge_apply(const Tensor& x, const Tensor& y, const Tensor& z, const Metric& g) {
  const int m = g.dim();
  require_valence(x, {Slot::Upper}, "wedge_apply");
  require_dim(x, m, "wedge_apply");
  require_dim(y, m, "wedge_apply");
  require_dim(z, m, "wedge_apply");
  const Rational gyz = inner(g, y, z);
  const Rational gxz = inner(g, x, z);
  Tensor out = Tensor::vec(m);
  for (int o = 0; o < m; ++o) {
    out(o) = gyz * x(o);
    out(o).subtract_product(gxz, y(o));
  }
  return out;
}

Tensor kulkarni_nomizu(const Metric& g, const Tensor& a) {
  const int m = g.dim();
  require_valence(a, {Slot::Lower, Slot::Lower}, "kulkarni_nomizu");
  require_dim(a, m, "kulkarni_nomizu");
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (a(i, j) != a(j, i))
        throw input_error("kulkarni_nomizu: tensor is not symmetric at (" +
                          std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  Tensor t = Tensor::cov(m, 4);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        for (int w = 0; w < m; ++w) {
          Rational& e = t(x, y, z, w);
          e.add_product(g(x, w), a(y, z));
          e.add_product(g(y, z), a(x, w));
          e.subtract_product(g(x, z), a(y, w));
          e.subtract_product(g(y, w), a(x, z));
        }
  return t;
}

Tensor endo_action(const Tensor& e, const Tensor& t) {
  const int m = t.dim();
  require_valence(e, {Slot::Lower, Slot::Upper}, "endo_action");
  require_dim(e, m, "endo_action");
  const int l = t.order();
  if (l < 1) throw input_error("endo_action: tensor must have at least one slot");
  for (Slot s : t.valence())
    if (s != Slot::Lower) throw input_error("endo_action: tensor must be fully covariant");

  Tensor out(m, t.valence());
  MultiIndex mi(m, l);
  do {
    const std::size_t base = t.flat(mi.idx);
    Rational acc;
    for (int s = 0; s < l; ++s) {
      const int xs = mi.idx[static_cast<std::size_t>(s)];
      const std::ptrdiff_t stride = static_cast<std::ptrdiff_t>(t.stride(s));
      for (int aa = 0; aa < m; ++aa) {
        const Rational& coef = e(xs, aa);
        if (coef.is_zero()) continue;
        const std::size_t f =
            static_cast<std::size_t>(static_cast<std::ptrdiff_t>(base) + (aa - xs) * stride);
        acc.subtract_product(coef, t.flat_at(f));
      }
    }
    out.flat_at(base) = std::move(acc);
  } while (mi.advance());
  return out;
}

Tensor endo_from_curv(const Tensor& a, int u, int v) {
  const int m = a.dim();
  require_valence(a, {Slot::Lower, Slot::Lower, Slot::Lower, Slot::Upper}, "endo_from_curv");
  Tensor e = Tensor::endo(m);
  for (int x = 0; x < m; ++x)
    for (int o = 0; o < m; ++o) e(x, o) = a(u, v, x, o);
  return e;
}

Tensor endo_contract_first(const Tensor& a, const Tensor& xi, int u) {
  const int m = a.dim();
  require_valence(a, {Slot::Lower, Slot::Lower, Slot::Lower, Slot::Upper}, "endo_contract_first");
  require_dim(xi, m, "endo_contract_first");
  Tensor e = Tensor::endo(m);
  for (int i = 0; i < m; ++i) {
    if (xi(i).is_zero()) continue;
    for (int x = 0; x < m; ++x)
      for (int o = 0; o < m; ++o) e(x, o).add_product(xi(i), a(i, u, x, o));
  }
  return e;
}

Tensor wedge_endo(const Metric& g, int u, int v) {
  const int m = g.dim();
  Tensor e = Tensor::endo(m);
  for (int x = 0; x < m; ++x) {
    e(x, u) += g(v, x);
    e(x, v) -= g(u, x);
  }
  return e;
}

Tensor wedge_family(const Metric& g) {
  const int m = g.dim();
  Tensor w = Tensor::curv(m);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v)
      for (int x = 0; x < m; ++x) {
        w(u, v, x, u) += g(v, x);
        w(u, v, x, v) -= g(u, x);
      }
  return w;
}

Tensor derivation_action(const Tensor& a, int u, int v, const Tensor& t) {
  return endo_action(endo_from_curv(a, u, v), t);
}

Tensor lower_last(const Tensor& t, const Metric& g) {
  const int m = t.dim();
  const int l = t.order();
  if (l < 1 || t.valence()[static_cast<std::size_t>(l - 1)] != Slot::Upper)
    throw input_error("lower_last: last slot is not upper");
  std::vector<Slot> val = t.valence();
  val[static_cast<std::size_t>(l - 1)] = Slot::Lower;
  Tensor out(m, val);
  MultiIndex mi(m, l - 1);
  do {
    std::size_t base = 0;
    for (int v : mi.idx) base = base * static_cast<std::size_t>(m) + static_cast<std::size_t>(v);
    base *= static_cast<std::size_t>(m);
    for (int w = 0; w < m; ++w) {
      Rational acc;
      for (int o = 0; o < m; ++o) {
        const Rational& c = t.flat_at(base + static_cast<std::size_t>(o));
        if (!c.is_zero()) acc.add_product(c, g(o, w));
      }
      out.flat_at(base + static_cast<std::size_t>(w)) = std::move(acc);
    }
  } while (mi.advance());
  return out;
}

Tensor raise_last(const Tensor& t, const Metric& g) {
  const int m = t.dim();
  const int l = t.order();
  if (l < 1 || t.valence()[static_cast<std::size_t>(l - 1)] != Slot::Lower)
    throw input_error("raise_last: last slot is not lower");
  std::vector<Slot> val = t.valence();
  val[static_cast<std::size_t>(l - 1)] = Slot::Upper;
  Tensor out(m, val);
  MultiIndex mi(m, l - 1);
  do {
    std::size_t base = 0;
    for (int v : mi.idx) base = base * static_cast<std::size_t>(m) + static_cast<std::size_t>(v);
    base *= static_cast<std::size_t>(m);
    for (int o = 0; o < m; ++o) {
      Rational acc;
      for (int w = 0; w < m; ++w) {
        const Rational& c = t.flat_at(base + static_cast<std::size_t>(w));
        if (!c.is_zero()) acc.add_product(c, g.inv(w, o));
      }
      out.flat_at(base + static_cast<std::size_t>(o)) = std::move(acc);
    }
  } while (mi.advance());
  return out;
}

}  // namespace curvwb
