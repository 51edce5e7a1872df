#include "curvwb/nullity.hpp"

#include "curvwb/tensor_ops.hpp"

namespace curvwb {

Tensor concircular(const Tensor& R, const Rational& r, const Metric& g) {
  const int m = R.dim();
  if (m < 2) throw input_error("concircular: dimension must be at least 2");
  const Rational f = r / Rational(static_cast<long>(m) * (m - 1));
  Tensor out = R;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        out(i, j, k, i).subtract_product(f, g(j, k));
        out(i, j, k, j).add_product(f, g(i, k));
      }
  return out;
}

Tensor weyl(const GeometryBundle& b, const Metric& g) {
  const int m = g.dim();
  if (m < 3) throw input_error("weyl: dimension must be at least 3");
  const Rational inv_m2 = Rational(1, m - 2);
  const Rational r_m1 = b.r / Rational(m - 1);
  Tensor C = b.R;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int o = 0; o < m; ++o) {
          // (e_i ∧ Q e_j) e_k = S(j,k) e_i − g(i,k) Q e_j
          // (Q e_i ∧ e_j) e_k = g(j,k) Q e_i − S(i,k) e_j
          Rational w;
          if (i == o) w += b.S(j, k);
          w.subtract_product(g(i, k), b.Q_op(j, o));
          w.add_product(g(j, k), b.Q_op(i, o));
          if (j == o) w -= b.S(i, k);
          Rational plain = (i == o ? g(j, k) : Rational(0)) - (j == o ? g(i, k) : Rational(0));
          w.subtract_product(r_m1, plain);
          C(i, j, k, o).subtract_product(inv_m2, w);
        }
  return C;
}

namespace {

struct LinEq {
  Rational a, b, lhs;  // a·κ + b·μ = lhs
  std::array<int, 3> where;
};

}  // namespace

NullityFit fit_kappa_mu(const FrameSpec& frame, const GeometryBundle& b, const Tensor& h) {
  if (!frame.contact) throw input_error("fit_kappa_mu: frame carries no contact data");
  const int m = frame.dim;
  const Tensor& xi = frame.contact->xi;
  const Tensor eta = eta_of(frame);

  auto equations_for_pair = [&](int i, int j) {
    std::vector<LinEq> eqs;
    for (int o = 0; o < m; ++o) {
      LinEq e;
      e.a = eta(j) * Rational(i == o ? 1 : 0) - eta(i) * Rational(j == o ? 1 : 0);
      e.b = eta(j) * h(i, o) - eta(i) * h(j, o);
      for (int k = 0; k < m; ++k) e.lhs.add_product(xi(k), b.R(i, j, k, o));
      e.where = {i + 1, j + 1, o + 1};
      if (!(e.a.is_zero() && e.b.is_zero() && e.lhs.is_zero())) eqs.push_back(std::move(e));
    }
    return eqs;
  };

  std::vector<LinEq> all;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (LinEq& e : equations_for_pair(i, j)) all.push_back(std::move(e));

  // exact least-structure solve helper; returns {kappa, mu, consistent}
  auto solve = [](const std::vector<LinEq>& eqs)
      -> std::tuple<std::optional<Rational>, std::optional<Rational>, bool, std::vector<int>> {
    std::optional<Rational> ka, mu;
    const LinEq* first = nullptr;
    for (const LinEq& e : eqs) {
      if (!e.a.is_zero() || !e.b.is_zero()) { first = &e; break; }
    }
    bool b_col_zero = true, a_col_zero = true;
    for (const LinEq& e : eqs) {
      if (!e.b.is_zero()) b_col_zero = false;
      if (!e.a.is_zero()) a_col_zero = false;
    }
    if (first) {
      const LinEq* second = nullptr;
      for (const LinEq& e : eqs) {
        if (&e == first) continue;
        if (!(first->a * e.b - e.a * first->b).is_zero()) { second = &e; break; }
      }
      if (second) {
        const Rational det = first->a * second->b - second->a * first->b;
        ka = (first->lhs * second->b - second->lhs * first->b) / det;
        mu = (first->a * second->lhs - second->a * first->lhs) / det;
      } else if (!a_col_zero && b_col_zero) {
        const LinEq* e1 = nullptr;
        for (const LinEq& e : eqs)
          if (!e.a.is_zero()) { e1 = &e; break; }
        ka = e1->lhs / e1->a;
      } else if (a_col_zero && !b_col_zero) {
        const LinEq* e1 = nullptr;
        for (const LinEq& e : eqs)
          if (!e.b.is_zero()) { e1 = &e; break; }
        mu = e1->lhs / e1->b;
      } else {
        // proportional nonzero columns: pin mu := 0 and solve for kappa
        ka = first->lhs / first->a;
        mu = Rational(0);
      }
    }
    const Rational k0 = ka.value_or(Rational(0));
    const Rational m0 = mu.value_or(Rational(0));
    for (const LinEq& e : eqs) {
      if (e.lhs != e.a * k0 + e.b * m0)
        return {ka, mu, false, {e.where[0], e.where[1], e.where[2]}};
    }
    return {ka, mu, true, {}};
  };

  NullityFit fit;
  auto [ka, mu, ok, wit] = solve(all);
  fit.global_fit = ok;
  if (ok) {
    fit.kappa = ka ? *ka : Rational(0);
    bool b_col_zero = true;
    for (const LinEq& e : all)
      if (!e.b.is_zero()) b_col_zero = false;
    if (b_col_zero) {
      fit.mu_indeterminate = true;
    } else {
      fit.mu = mu ? *mu : Rational(0);
    }
  } else {
    fit.witness = wit;
  }

  // per-pair table over (e_i, ξ) pairs
  for (int i = 0; i < m; ++i) {
    std::vector<LinEq> eqs;
    for (int o = 0; o < m; ++o) {
      LinEq e;
      Rational etaxi;
      for (int a = 0; a < m; ++a) etaxi.add_product(eta(a), xi(a));
      e.a = etaxi * Rational(i == o ? 1 : 0) - eta(i) * xi(o);
      Rational hxi_o;
      for (int l = 0; l < m; ++l) hxi_o.add_product(xi(l), h(l, o));
      e.b = etaxi * h(i, o) - eta(i) * hxi_o;
      // lhs = R(e_i, ξ)ξ = Σ_j Σ_k ξ^j ξ^k R(i,j,k,·)
      for (int j = 0; j < m; ++j) {
        if (xi(j).is_zero()) continue;
        for (int k = 0; k < m; ++k) {
          if (xi(k).is_zero()) continue;
          Rational f = xi(j) * xi(k);
          e.lhs.add_product(f, b.R(i, j, k, o));
        }
      }
      e.where = {i + 1, 0, o + 1};
      eqs.push_back(std::move(e));
    }
    bool trivial = true;
    for (const LinEq& e : eqs)
      if (!e.a.is_zero() || !e.b.is_zero() || !e.lhs.is_zero()) trivial = false;
    if (trivial) continue;  // e_i parallel to ξ
    auto [pka, pmu, pok, pwit] = solve(eqs);
    (void)pmu;
    (void)pwit;
    fit.per_pair[i + 1] = pok ? pka : std::nullopt;
  }
  return fit;
}

namespace {

using Endo = Tensor;

Endo compose(const Endo& a, const Endo& b) {
  // (a∘b)X = a(bX): out(i,o) = Σ_k b(i,k) a(k,o)
  const int m = a.dim();
  Endo out = Tensor::endo(m);
  for (int i = 0; i < m; ++i)
    for (int o = 0; o < m; ++o) {
      Rational t;
      for (int k = 0; k < m; ++k) t.add_product(b(i, k), a(k, o));
      out(i, o) = std::move(t);
    }
  return out;
}

struct IdentityCheck {
  std::string id;
  bool gated;  // needs n > 1 and a non-Sasakian structure
  Tensor lhs, rhs;
};

}  // namespace

std::vector<IdentityResult> identity_suite(const FrameSpec& frame, const GeometryBundle& b,
                                           const Tensor& h, const NullityFit& fit) {
  std::vector<IdentityResult> out;
  if (!fit.global_fit || !fit.kappa || !frame.contact) return out;
  const int m = frame.dim;
  const int n = frame.contact_n();
  const Rational kappa = *fit.kappa;
  const Metric& g = frame.metric;
  const Tensor& phi = frame.contact->phi;
  const Tensor& xi = frame.contact->xi;
  const Tensor eta = eta_of(frame);
  const Rational two_n(2L * n);
  const Rational coef_n1(4L * (n - 1));      // 4(n−1)
  const Rational coef_2n2(2L * (2 * n - 2)); // 2(2n−2)

  std::vector<IdentityCheck> checks;

  {
    // Qφ − φQ = 4(n−1) hφ
    Endo Qphi = compose(b.Q_op, phi), phiQ = compose(phi, b.Q_op), hphi = compose(h, phi);
    IdentityCheck c{"Q_phi_commutator", true, Qphi - phiQ, coef_n1 * hphi};
    checks.push_back(std::move(c));
  }
  {
    // h² = (κ−1) φ²
    Endo h2 = compose(h, h), phi2 = compose(phi, phi);
    checks.push_back({"h_squared", false, std::move(h2), (kappa - Rational(1)) * phi2});
  }
  {
    // Qξ = 2nκ ξ
    Tensor lhs = Tensor::vec(m), rhs = Tensor::vec(m);
    for (int o = 0; o < m; ++o) {
      for (int k = 0; k < m; ++k) lhs(o).add_product(xi(k), b.Q_op(k, o));
      rhs(o) = two_n * kappa * xi(o);
    }
    checks.push_back({"Q_xi", false, std::move(lhs), std::move(rhs)});
  }
  {
    // R(ξ,X)Y = κ [g(X,Y)ξ − η(Y)X]
    Tensor lhs = Tensor::cov(m, 3), rhs = Tensor::cov(m, 3);
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        for (int o = 0; o < m; ++o) {
          Rational t;
          for (int k = 0; k < m; ++k) t.add_product(xi(k), b.R(k, x, y, o));
          lhs(x, y, o) = std::move(t);
          Rational w = g(x, y) * xi(o) - eta(y) * Rational(x == o ? 1 : 0);
          rhs(x, y, o) = kappa * w;
        }
    checks.push_back({"R_xi_endomorphism", false, std::move(lhs), std::move(rhs)});
  }
  {
    // tr h² = 2n(1−κ)
    Tensor lhs(m, {}), rhs(m, {});
    Rational tr;
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k) tr.add_product(h(i, k), h(k, i));
    lhs.flat_at(0) = std::move(tr);
    rhs.flat_at(0) = two_n * (Rational(1) - kappa);
    checks.push_back({"trace_h_squared", false, std::move(lhs), std::move(rhs)});
  }
  {
    // S(X,φY) + S(φX,Y) = 2(2n−2) g(φX, hY)
    Tensor lhs = Tensor::form2(m), rhs = Tensor::form2(m);
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) {
        Rational t;
        for (int k = 0; k < m; ++k) {
          t.add_product(phi(y, k), b.S(x, k));
          t.add_product(phi(x, k), b.S(k, y));
        }
        lhs(x, y) = std::move(t);
        Rational w;
        for (int a = 0; a < m; ++a)
          for (int c2 = 0; c2 < m; ++c2) {
            if (phi(x, a).is_zero() || h(y, c2).is_zero()) continue;
            Rational f = phi(x, a) * g(a, c2);
            w.add_product(f, h(y, c2));
          }
        rhs(x, y) = coef_2n2 * w;
      }
    checks.push_back({"S_phi_mixed", true, std::move(lhs), std::move(rhs)});
  }
  {
    // S(φX,φY) = S(X,Y) − 2nκ η(X)η(Y) − 2(2n−2) g(hX,Y)
    Tensor lhs = Tensor::form2(m), rhs = Tensor::form2(m);
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) {
        Rational t;
        for (int a = 0; a < m; ++a)
          for (int c2 = 0; c2 < m; ++c2) {
            if (phi(x, a).is_zero() || phi(y, c2).is_zero()) continue;
            Rational f = phi(x, a) * phi(y, c2);
            t.add_product(f, b.S(a, c2));
          }
        lhs(x, y) = std::move(t);
        Rational w = b.S(x, y) - two_n * kappa * eta(x) * eta(y);
        for (int a = 0; a < m; ++a) {
          Rational f = coef_2n2 * h(x, a);
          w.subtract_product(f, g(a, y));
        }
        rhs(x, y) = std::move(w);
      }
    checks.push_back({"S_phi_phi", true, std::move(lhs), std::move(rhs)});
  }
  {
    // S(X,ξ) = 2nκ η(X)
    Tensor lhs = Tensor::covec(m), rhs = Tensor::covec(m);
    for (int x = 0; x < m; ++x) {
      for (int k = 0; k < m; ++k) lhs(x).add_product(xi(k), b.S(x, k));
      rhs(x) = two_n * kappa * eta(x);
    }
    checks.push_back({"S_X_xi", false, std::move(lhs), std::move(rhs)});
  }
  {
    // Qφ + φQ = 2φQ + 2(2n−2) hφ
    Endo Qphi = compose(b.Q_op, phi), phiQ = compose(phi, b.Q_op), hphi = compose(h, phi);
    Tensor lhs = Qphi + phiQ;
    Tensor rhs = Rational(2) * phiQ + coef_2n2 * hphi;
    checks.push_back({"Q_phi_anticommutator", true, std::move(lhs), std::move(rhs)});
  }
  {
    // η(R(X,Y)Z) = κ [g(Y,Z)η(X) − g(X,Z)η(Y)]
    Tensor lhs = Tensor::cov(m, 3), rhs = Tensor::cov(m, 3);
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        for (int z = 0; z < m; ++z) {
          Rational t;
          for (int o = 0; o < m; ++o) t.add_product(b.R(x, y, z, o), eta(o));
          lhs(x, y, z) = std::move(t);
          rhs(x, y, z) = kappa * (g(y, z) * eta(x) - g(x, z) * eta(y));
        }
    checks.push_back({"eta_of_R", false, std::move(lhs), std::move(rhs)});
  }
  {
    // S(φX, ξ) = 0
    Tensor lhs = Tensor::covec(m), rhs = Tensor::covec(m);
    for (int x = 0; x < m; ++x)
      for (int a = 0; a < m; ++a)
        for (int k = 0; k < m; ++k) {
          if (phi(x, a).is_zero() || xi(k).is_zero()) continue;
          Rational f = phi(x, a) * xi(k);
          lhs(x).add_product(f, b.S(a, k));
        }
    checks.push_back({"S_phi_xi", false, std::move(lhs), std::move(rhs)});
  }
  {
    // r = 2n(2n−2+κ)
    Tensor lhs(m, {}), rhs(m, {});
    lhs.flat_at(0) = b.r;
    rhs.flat_at(0) = two_n * (Rational(2L * n - 2) + kappa);
    checks.push_back({"scalar_curvature_relation", true, std::move(lhs), std::move(rhs)});
  }

  const bool in_hypothesis = n > 1 && kappa < Rational(1);
  for (IdentityCheck& c : checks) {
    IdentityResult res;
    res.id = c.id;
    if (c.lhs == c.rhs) {
      res.status = IdentityStatus::Pass;
    } else {
      res.status = (c.gated && !in_hypothesis) ? IdentityStatus::OutOfHypothesis
                                               : IdentityStatus::Fail;
      MultiIndex mi(m, c.lhs.order());
      do {
        if (c.lhs.at(mi.idx) != c.rhs.at(mi.idx)) {
          for (int v : mi.idx) res.witness.push_back(v + 1);
          break;
        }
      } while (mi.advance());
    }
    out.push_back(std::move(res));
  }
  return out;
}

EtaEinsteinFit eta_einstein_fit(const Tensor& S, const Metric& g, const Tensor& eta,
                                const std::optional<Rational>& kappa,
                                const std::optional<Rational>& r, int n) {
  const int m = g.dim();
  EtaEinsteinFit fit;
  // equations S(i,j) = c1 g(i,j) + c2 η_i η_j ; solve from first independent pair
  struct Eq { Rational a, b, lhs; };
  std::vector<Eq> eqs;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) eqs.push_back({g(i, j), eta(i) * eta(j), S(i, j)});
  const Eq* first = nullptr;
  for (const Eq& e : eqs)
    if (!e.a.is_zero() || !e.b.is_zero()) { first = &e; break; }
  Rational c1, c2;
  if (first) {
    const Eq* second = nullptr;
    for (const Eq& e : eqs) {
      if (&e == first) continue;
      if (!(first->a * e.b - e.a * first->b).is_zero()) { second = &e; break; }
    }
    if (second) {
      const Rational det = first->a * second->b - second->a * first->b;
      c1 = (first->lhs * second->b - second->lhs * first->b) / det;
      c2 = (first->a * second->lhs - second->a * first->lhs) / det;
    } else if (!first->a.is_zero()) {
      c1 = first->lhs / first->a;
    } else {
      c2 = first->lhs / first->b;
    }
  }
  fit.c1 = c1;
  fit.c2 = c2;
  fit.exact = true;
  for (int i = 0; i < m && fit.exact; ++i)
    for (int j = 0; j < m; ++j)
      if (S(i, j) != c1 * g(i, j) + c2 * eta(i) * eta(j)) {
        fit.exact = false;
        fit.witness = {i + 1, j + 1};
        break;
      }
  if (kappa && r && n > 0) {
    const Rational two_n(2L * n);
    const Rational want_c1 = *r / two_n - *kappa;
    const Rational want_c2 = Rational(2L * n + 1) * *kappa - *r / two_n;
    fit.closed_form_match = fit.exact && c1 == want_c1 && c2 == want_c2;
    fit.trace_r_ok = *r == Rational(2L * n + 1) * c1 + c2;
    fit.trace_kappa_ok = two_n * *kappa == c1 + c2;
  }
  return fit;
}

bool is_einstein(const Tensor& S, const Metric& g, const Rational& r) {
  const int m = g.dim();
  const Rational f = r / Rational(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (S(i, j) != f * g(i, j)) return false;
  return true;
}

}  // namespace curvwb
