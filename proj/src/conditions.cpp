#include "curvwb/conditions.hpp"

#include "curvwb/tensor_ops.hpp"

namespace curvwb {

const char* condition_id(ConditionKind kind) {
  switch (kind) {
    case ConditionKind::CtildeXiCtilde: return "ctilde_xi_ctilde";
    case ConditionKind::CtildeXiR: return "ctilde_xi_r";
    case ConditionKind::CtildeXiS: return "ctilde_xi_s";
    case ConditionKind::CtildeXiC: return "ctilde_xi_c";
    case ConditionKind::CdotS: return "c_dot_s";
    case ConditionKind::Pseudosymmetry: return "pseudosymmetry";
  }
  return "?";
}

ConditionKind condition_from_id(const std::string& id) {
  for (ConditionKind k : {ConditionKind::CtildeXiCtilde, ConditionKind::CtildeXiR,
                          ConditionKind::CtildeXiS, ConditionKind::CtildeXiC,
                          ConditionKind::CdotS, ConditionKind::Pseudosymmetry})
    if (id == condition_id(k)) return k;
  throw input_error("unknown condition kind '" + id + "'");
}

namespace {

// first nonzero entry of (E_u · T) over all u, as a 1-based witness (idx..., u)
std::optional<std::vector<int>> xi_condition_witness(const FrameSpec& frame, const Tensor& ctilde,
                                                     const Tensor& t) {
  const int m = frame.dim;
  for (int u = 0; u < m; ++u) {
    const Tensor e = endo_contract_first(ctilde, frame.contact->xi, u);
    if (e.is_zero()) continue;
    const Tensor acted = endo_action(e, t);
    if (acted.is_zero()) continue;
    MultiIndex mi(m, acted.order());
    do {
      if (!acted.at(mi.idx).is_zero()) {
        std::vector<int> w;
        for (int v : mi.idx) w.push_back(v + 1);
        w.push_back(u + 1);
        return w;
      }
    } while (mi.advance());
  }
  return std::nullopt;
}

}  // namespace

ConditionVerdict check_curvature_condition(ConditionKind kind, const FrameSpec& frame,
                                           const GeometryBundle& b, const Tensor& ctilde,
                                           const Tensor* weyl_c) {
  ConditionVerdict v;
  v.id = condition_id(kind);
  const Metric& g = frame.metric;
  switch (kind) {
    case ConditionKind::CtildeXiCtilde:
    case ConditionKind::CtildeXiR:
    case ConditionKind::CtildeXiS:
    case ConditionKind::CtildeXiC: {
      if (!frame.contact)
        throw input_error("condition needs contact data: " + std::string(condition_id(kind)));
      const Tensor* t = nullptr;
      Tensor low = Tensor::form2(1);
      if (kind == ConditionKind::CtildeXiCtilde) {
        low = lower_last(ctilde, g);
        t = &low;
      } else if (kind == ConditionKind::CtildeXiR) {
        t = &b.R_low;
      } else if (kind == ConditionKind::CtildeXiS) {
        t = &b.S;
      } else {
        if (!weyl_c) throw input_error("condition needs the Weyl tensor");
        low = lower_last(*weyl_c, g);
        t = &low;
      }
      if (auto w = xi_condition_witness(frame, ctilde, *t)) {
        v.holds = false;
        v.witness = *w;
      }
      break;
    }
    case ConditionKind::CdotS: {
      if (!weyl_c) throw input_error("condition needs the Weyl tensor");
      const int m = frame.dim;
      for (int u = 0; u < m && v.holds; ++u)
        for (int w = 0; w < m && v.holds; ++w) {
          const Tensor e = endo_from_curv(*weyl_c, u, w);
          if (e.is_zero()) continue;
          const Tensor acted = endo_action(e, b.S);
          if (acted.is_zero()) continue;
          for (int z = 0; z < m && v.holds; ++z)
            for (int y = 0; y < m; ++y)
              if (!acted(z, y).is_zero()) {
                v.holds = false;
                v.witness = {z + 1, y + 1, u + 1, w + 1};
                break;
              }
        }
      break;
    }
    case ConditionKind::Pseudosymmetry:
      throw input_error("pseudosymmetry is handled by pseudosymmetry_fit");
  }
  return v;
}

ConditionVerdict pseudosymmetry_fit(const GeometryBundle& b, const Tensor& weyl_c,
                                    const Metric& g, const std::optional<Rational>& kappa,
                                    ExecMode mode) {
  ConditionVerdict v;
  v.id = condition_id(ConditionKind::Pseudosymmetry);
  const Tensor c_low = lower_last(weyl_c, g);
  const Tensor rc = derivation_full(b.R, c_low, mode);
  const Tensor qc = q_full(g, c_low, mode);
  const bool rc_zero = rc.is_zero();
  const bool qc_zero = qc.is_zero();
  const int m = g.dim();
  auto first_nonzero = [&](const Tensor& t) {
    std::vector<int> w;
    MultiIndex mi(m, t.order());
    do {
      if (!t.at(mi.idx).is_zero()) {
        for (int x : mi.idx) w.push_back(x + 1);
        return w;
      }
    } while (mi.advance());
    return w;
  };
  if (rc_zero && qc_zero) {
    v.holds = true;
    v.fc_status = FcStatus::Indeterminate;
    return v;
  }
  if (qc_zero) {
    v.holds = false;
    v.fc_status = FcStatus::NoFit;
    v.witness = first_nonzero(rc);
    return v;
  }
  // unique f over entries with qc != 0; entries with qc = 0 need rc = 0
  std::optional<Rational> f;
  MultiIndex mi(m, rc.order());
  do {
    const Rational& qv = qc.at(mi.idx);
    const Rational& rv = rc.at(mi.idx);
    if (qv.is_zero()) {
      if (!rv.is_zero()) {
        v.holds = false;
        v.fc_status = FcStatus::NoFit;
        for (int x : mi.idx) v.witness.push_back(x + 1);
        return v;
      }
      continue;
    }
    const Rational cand = rv / qv;
    if (!f) {
      f = cand;
    } else if (cand != *f) {
      v.holds = false;
      v.fc_status = FcStatus::NoFit;
      for (int x : mi.idx) v.witness.push_back(x + 1);
      return v;
    }
  } while (mi.advance());
  v.holds = true;
  v.fc_status = FcStatus::Fitted;
  v.f_c = *f;
  if (kappa) v.f_c_is_minus_kappa = (*f == -Rational(1) * *kappa);
  return v;
}

SSquareReport s_square_formula_check(const GeometryBundle& b, const Metric& g,
                                     const Rational& kappa, int n, bool c_dot_s_holds) {
  SSquareReport rep;
  const int m = g.dim();
  const Rational denom(2L * n * (2L * n + 1));
  const Rational c_s = Rational(2L * n - 1) * kappa - Rational(2L * n - 1) * b.r / denom;
  const Rational c_g =
      -Rational(1) * Rational(2L * n) * kappa * (kappa + Rational(2L * n - 1) * b.r / denom);
  rep.equality_holds = true;
  for (int i = 0; i < m && rep.equality_holds; ++i)
    for (int j = 0; j < m; ++j) {
      const Rational want = c_s * b.S(i, j) + c_g * g(i, j);
      if (b.S2(i, j) != want) {
        rep.equality_holds = false;
        rep.witness = {i + 1, j + 1};
        break;
      }
    }
  if (n <= 1)
    rep.status = SSquareStatus::OutOfHypothesis;
  else if (!c_dot_s_holds)
    rep.status = SSquareStatus::PremiseNotSatisfied;
  else
    rep.status = rep.equality_holds ? SSquareStatus::Holds : SSquareStatus::Fails;
  return rep;
}

Lemma31Report lemma31_check(const Metric& g, const Tensor& a, ExecMode mode) {
  const int m = g.dim();
  require_valence(a, {Slot::Lower, Slot::Lower}, "lemma31_check");
  require_dim(a, m, "lemma31_check");
  Lemma31Report rep;
  // A² as a (0,2) tensor: A²(i,j) = Σ_{k,l} A(i,k) g^{kl} A(l,j)
  Tensor a2 = Tensor::form2(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Rational t;
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          if (a(i, k).is_zero() || a(l, j).is_zero()) continue;
          Rational f = a(i, k) * g.inv(k, l);
          t.add_product(f, a(l, j));
        }
      a2(i, j) = std::move(t);
    }
  // solve A² = α A + λ g
  struct Eq { Rational p, q, lhs; };
  std::vector<Eq> eqs;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) eqs.push_back({a(i, j), g(i, j), a2(i, j)});
  const Eq* first = nullptr;
  for (const Eq& e : eqs)
    if (!e.p.is_zero() || !e.q.is_zero()) { first = &e; break; }
  Rational alpha, lambda;
  if (first) {
    const Eq* second = nullptr;
    for (const Eq& e : eqs) {
      if (&e == first) continue;
      if (!(first->p * e.q - e.p * first->q).is_zero()) { second = &e; break; }
    }
    if (second) {
      const Rational det = first->p * second->q - second->p * first->q;
      alpha = (first->lhs * second->q - second->lhs * first->q) / det;
      lambda = (first->p * second->lhs - second->p * first->lhs) / det;
    } else if (!first->p.is_zero()) {
      alpha = first->lhs / first->p;  // lambda pinned to 0
    } else {
      lambda = first->lhs / first->q;
    }
  }
  rep.alpha = alpha;
  rep.lambda = lambda;
  rep.poly_solved = true;
  for (int i = 0; i < m && rep.poly_solved; ++i)
    for (int j = 0; j < m; ++j)
      if (a2(i, j) != alpha * a(i, j) + lambda * g(i, j)) {
        rep.poly_solved = false;
        break;
      }
  const Tensor t = kulkarni_nomizu(g, a);
  const Tensor t_op = raise_last(t, g);
  const Tensor tt = derivation_full(t_op, t, mode);
  Tensor qt = q_full(g, t, mode);
  qt.scale(alpha);
  rep.identity_holds = (tt == qt);
  if (!rep.identity_holds) {
    MultiIndex mi(m, tt.order());
    do {
      if (tt.at(mi.idx) != qt.at(mi.idx)) {
        for (int x : mi.idx) rep.witness.push_back(x + 1);
        break;
      }
    } while (mi.advance());
  }
  return rep;
}

bool r_ctilde_equals_r_r(const GeometryBundle& b, const Tensor& ctilde, const Metric& g,
                         ExecMode mode) {
  const Tensor lhs = derivation_full(b.R, lower_last(ctilde, g), mode);
  const Tensor rhs = derivation_full(b.R, b.R_low, mode);
  return lhs == rhs;
}

}  // namespace curvwb
