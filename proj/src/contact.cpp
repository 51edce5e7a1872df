#include "curvwb/contact.hpp"

#include "curvwb/tensor_ops.hpp"

namespace curvwb {

namespace {

const ContactData& contact_of(const FrameSpec& frame) {
  if (!frame.contact) throw input_error("frame carries no contact data");
  return *frame.contact;
}

Tensor apply_endo(const Tensor& e, const Tensor& v) {
  const int m = e.dim();
  Tensor out = Tensor::vec(m);
  for (int i = 0; i < m; ++i) {
    if (v(i).is_zero()) continue;
    for (int o = 0; o < m; ++o) out(o).add_product(v(i), e(i, o));
  }
  return out;
}

}  // namespace

Rational d_eta(const FrameSpec& frame, int i, int j) {
  const Tensor eta = eta_of(frame);
  const int m = frame.dim;
  Rational s;
  for (int k = 0; k < m; ++k) s.add_product(frame.brackets(i, j, k), eta(k));
  return Rational(-1, 2) * s;
}

AxiomReport check_contact_axioms(const FrameSpec& frame) {
  const ContactData& cd = contact_of(frame);
  const int m = frame.dim;
  const Metric& g = frame.metric;
  const Tensor eta = eta_of(frame);
  AxiomReport rep;

  {
    NamedCheck c{"eta_xi_is_one", true, {}};
    Rational s;
    for (int i = 0; i < m; ++i) s.add_product(eta(i), cd.xi(i));
    if (s != Rational(1)) c.holds = false;
    rep.checks.push_back(std::move(c));
  }
  {
    NamedCheck c{"phi_xi_is_zero", true, {}};
    const Tensor px = apply_endo(cd.phi, cd.xi);
    for (int o = 0; o < m; ++o)
      if (!px(o).is_zero()) { c.holds = false; c.witness = {o + 1}; break; }
    rep.checks.push_back(std::move(c));
  }
  {
    NamedCheck c{"eta_phi_is_zero", true, {}};
    for (int i = 0; i < m && c.holds; ++i) {
      Rational s;
      for (int k = 0; k < m; ++k) s.add_product(cd.phi(i, k), eta(k));
      if (!s.is_zero()) { c.holds = false; c.witness = {i + 1}; }
    }
    rep.checks.push_back(std::move(c));
  }
  {
    NamedCheck c{"phi_squared", true, {}};
    for (int i = 0; i < m && c.holds; ++i)
      for (int o = 0; o < m; ++o) {
        Rational s;
        for (int k = 0; k < m; ++k) s.add_product(cd.phi(i, k), cd.phi(k, o));
        Rational want = eta(i) * cd.xi(o) - Rational(i == o ? 1 : 0);
        if (s != want) { c.holds = false; c.witness = {i + 1, o + 1}; break; }
      }
    rep.checks.push_back(std::move(c));
  }
  {
    NamedCheck c{"phi_compatibility", true, {}};
    for (int i = 0; i < m && c.holds; ++i)
      for (int j = 0; j < m; ++j) {
        Rational lhs;
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b) {
            if (cd.phi(i, a).is_zero() || cd.phi(j, b).is_zero()) continue;
            Rational t = cd.phi(i, a) * g(a, b);
            lhs.add_product(t, cd.phi(j, b));
          }
        Rational rhs = g(i, j) - eta(i) * eta(j);
        if (lhs != rhs) { c.holds = false; c.witness = {i + 1, j + 1}; break; }
      }
    rep.checks.push_back(std::move(c));
  }
  {
    NamedCheck c{"d_eta_matches_phi", true, {}};
    for (int i = 0; i < m && c.holds; ++i)
      for (int j = 0; j < m; ++j) {
        Rational rhs;  // g(e_i, phi e_j)
        for (int a = 0; a < m; ++a) rhs.add_product(cd.phi(j, a), g(i, a));
        if (d_eta(frame, i, j) != rhs) { c.holds = false; c.witness = {i + 1, j + 1}; break; }
      }
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

Tensor compute_h(const FrameSpec& frame) {
  const ContactData& cd = contact_of(frame);
  const int m = frame.dim;
  const Tensor& c = frame.brackets;
  Tensor h = Tensor::endo(m);
  const Rational half(1, 2);
  for (int j = 0; j < m; ++j) {
    // [xi, phi e_j]
    Tensor t1 = Tensor::vec(m);
    for (int i = 0; i < m; ++i) {
      if (cd.xi(i).is_zero()) continue;
      for (int k = 0; k < m; ++k) {
        if (cd.phi(j, k).is_zero()) continue;
        const Rational f = cd.xi(i) * cd.phi(j, k);
        for (int o = 0; o < m; ++o) t1(o).add_product(f, c(i, k, o));
      }
    }
    // phi [xi, e_j]
    Tensor t2 = Tensor::vec(m);
    for (int i = 0; i < m; ++i) {
      if (cd.xi(i).is_zero()) continue;
      for (int l = 0; l < m; ++l) {
        if (c(i, j, l).is_zero()) continue;
        const Rational f = cd.xi(i) * c(i, j, l);
        for (int o = 0; o < m; ++o) t2(o).add_product(f, cd.phi(l, o));
      }
    }
    for (int o = 0; o < m; ++o) h(j, o) = half * (t1(o) - t2(o));
  }
  return h;
}

AxiomReport check_h_identities(const FrameSpec& frame, const Tensor& h, const Connection& conn) {
  const ContactData& cd = contact_of(frame);
  const int m = frame.dim;
  const Metric& g = frame.metric;
  AxiomReport rep;

  {
    NamedCheck c{"h_xi_is_zero", true, {}};
    const Tensor hx = apply_endo(h, cd.xi);
    for (int o = 0; o < m; ++o)
      if (!hx(o).is_zero()) { c.holds = false; c.witness = {o + 1}; break; }
    rep.checks.push_back(std::move(c));
  }
  {
    NamedCheck c{"h_phi_anticommute", true, {}};
    for (int i = 0; i < m && c.holds; ++i)
      for (int o = 0; o < m; ++o) {
        Rational lhs, rhs;  // (h∘φ)(e_i) vs −(φ∘h)(e_i), composition right-to-left
        for (int k = 0; k < m; ++k) {
          lhs.add_product(cd.phi(i, k), h(k, o));
          rhs.subtract_product(h(i, k), cd.phi(k, o));
        }
        if (lhs != rhs) { c.holds = false; c.witness = {i + 1, o + 1}; break; }
      }
    rep.checks.push_back(std::move(c));
  }
  {
    NamedCheck c{"trace_h_is_zero", true, {}};
    Rational tr;
    for (int i = 0; i < m; ++i) tr += h(i, i);
    c.holds = tr.is_zero();
    rep.checks.push_back(std::move(c));
  }
  {
    NamedCheck c{"trace_phi_h_is_zero", true, {}};
    Rational tr;
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k) tr.add_product(h(i, k), cd.phi(k, i));
    c.holds = tr.is_zero();
    rep.checks.push_back(std::move(c));
  }
  {
    NamedCheck c{"h_g_symmetric", true, {}};
    for (int i = 0; i < m && c.holds; ++i)
      for (int j = 0; j < m; ++j) {
        Rational lhs, rhs;
        for (int k = 0; k < m; ++k) {
          lhs.add_product(h(i, k), g(k, j));
          rhs.add_product(h(j, k), g(k, i));
        }
        if (lhs != rhs) { c.holds = false; c.witness = {i + 1, j + 1}; break; }
      }
    rep.checks.push_back(std::move(c));
  }
  {
    NamedCheck c{"nabla_xi_law", true, {}};
    // nabla_{e_i} xi = -phi e_i - phi h e_i
    for (int i = 0; i < m && c.holds; ++i)
      for (int o = 0; o < m; ++o) {
        Rational lhs;
        for (int k = 0; k < m; ++k) lhs.add_product(cd.xi(k), conn.gamma(i, k, o));
        Rational rhs = -Rational(1) * cd.phi(i, o);
        for (int k = 0; k < m; ++k) rhs.subtract_product(h(i, k), cd.phi(k, o));
        if (lhs != rhs) { c.holds = false; c.witness = {i + 1, o + 1}; break; }
      }
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

SasakiReport sasakian_and_kcontact(const FrameSpec& frame, const GeometryBundle& bundle) {
  const ContactData& cd = contact_of(frame);
  const int m = frame.dim;
  const Tensor eta = eta_of(frame);
  SasakiReport rep;
  for (int i = 0; i < m && rep.sasakian; ++i)
    for (int j = 0; j < m && rep.sasakian; ++j)
      for (int o = 0; o < m; ++o) {
        Rational lhs;
        for (int k = 0; k < m; ++k) lhs.add_product(cd.xi(k), bundle.R(i, j, k, o));
        Rational rhs = eta(j) * Rational(i == o ? 1 : 0) - eta(i) * Rational(j == o ? 1 : 0);
        if (lhs != rhs) {
          rep.sasakian = false;
          rep.sasakian_witness = {i + 1, j + 1, o + 1};
          break;
        }
      }
  const Metric& g = frame.metric;
  for (int i = 0; i < m && rep.k_contact; ++i)
    for (int j = 0; j < m; ++j) {
      Rational s;
      for (int k = 0; k < m; ++k)
        for (int a = 0; a < m; ++a) {
          if (cd.xi(k).is_zero()) continue;
          Rational t = cd.xi(k) * g(a, j);
          s.add_product(t, bundle.conn.gamma(i, k, a));
          t = cd.xi(k) * g(a, i);
          s.add_product(t, bundle.conn.gamma(j, k, a));
        }
      if (!s.is_zero()) {
        rep.k_contact = false;
        rep.k_contact_witness = {i + 1, j + 1};
        break;
      }
    }
  return rep;
}

}  // namespace curvwb
