#include "curvwb/classify.hpp"

#include <cstdio>

#include "curvwb/boeckx.hpp"
#include "curvwb/conditions.hpp"
#include "curvwb/contact.hpp"
#include "curvwb/nullity.hpp"
#include "curvwb/tensor_ops.hpp"

namespace curvwb {

namespace {

std::vector<SparseEntry> sparse_of(const Tensor& t) {
  std::vector<SparseEntry> out;
  MultiIndex mi(t.dim(), t.order());
  do {
    const Rational& v = t.at(mi.idx);
    if (v.is_zero()) continue;
    SparseEntry e;
    for (int x : mi.idx) e.idx.push_back(x + 1);
    e.value = v.str();
    out.push_back(std::move(e));
  } while (mi.advance());
  return out;
}

Tensor gamma_row(const Tensor& gamma, int i, int j) {
  Tensor v = Tensor::vec(gamma.dim());
  for (int k = 0; k < gamma.dim(); ++k) v(k) = gamma(i, j, k);
  return v;
}

Tensor curvature_vec(const Tensor& R, int i, int j, int k) {
  Tensor v = Tensor::vec(R.dim());
  for (int o = 0; o < R.dim(); ++o) v(o) = R(i, j, k, o);
  return v;
}

std::string approx_str(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

ClassificationReport classify(const FrameSpec& frame, const std::string& input_id,
                              const ReferenceTables* refs, ExecMode mode) {
  ClassificationReport rep;
  rep.input_id = input_id;
  rep.dim = frame.dim;
  const int m = frame.dim;
  const Metric& g = frame.metric;

  const Connection koszul = levi_civita(frame);
  const bool overridden = frame.use_override && frame.connection_override.has_value();
  rep.connection_source = overridden ? "override" : "koszul";
  if (frame.use_override && !frame.connection_override)
    throw input_error("the frame carries no connection table to activate");

  GeometryBundle b = make_geometry(frame);
  const ConnectionCheck cc = check_connection(frame, b.conn);
  rep.torsion_free = cc.torsion_free;
  if (cc.torsion_witness)
    rep.torsion_witness.assign(cc.torsion_witness->begin(), cc.torsion_witness->end());
  rep.metric_compatible = cc.metric_compatible;
  if (cc.compat_witness)
    rep.compat_witness.assign(cc.compat_witness->begin(), cc.compat_witness->end());
  rep.gamma = sparse_of(b.conn.gamma);
  rep.curvature = sparse_of(b.R);
  rep.ricci = sparse_of(b.S);
  rep.scalar_curvature = b.r.str();

  // a carried connection table is validated even when it is not active
  if (frame.connection_override) {
    const Connection ov{*frame.connection_override};
    const ConnectionCheck oc = check_connection(frame, ov);
    if (!oc.torsion_free) {
      Diagnostic d;
      d.severity = "error";
      d.section = "connection";
      d.code = "override_torsion";
      d.message = "the supplied connection table is not torsion-free for the frame brackets";
      d.witness.assign(oc.torsion_witness->begin(), oc.torsion_witness->end());
      rep.diagnostics.push_back(std::move(d));
    }
    if (!oc.metric_compatible) {
      Diagnostic d;
      d.severity = "error";
      d.section = "connection";
      d.code = "override_metric_compat";
      d.message = "the supplied connection table is not metric-compatible";
      d.witness.assign(oc.compat_witness->begin(), oc.compat_witness->end());
      rep.diagnostics.push_back(std::move(d));
    }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        const Tensor kv = gamma_row(koszul.gamma, i, j);
        const Tensor ovv = gamma_row(*frame.connection_override, i, j);
        if (kv == ovv) continue;
        Diagnostic d;
        d.severity = "info";
        d.section = "connection";
        d.code = "connection_table_divergence";
        d.message = "supplied table and Koszul connection differ at nabla_{e" +
                    std::to_string(i + 1) + "} e" + std::to_string(j + 1);
        d.witness = {i + 1, j + 1};
        d.expected = format_vector(ovv);
        d.computed = format_vector(kv);
        rep.diagnostics.push_back(std::move(d));
      }
  }

  rep.flat = b.R.is_zero();
  const ConstCurvatureFit ccf = constant_curvature_fit(b.R, g);
  if (ccf.c) rep.constant_curvature = ccf.c->str();
  rep.einstein = is_einstein(b.S, g, b.r);

  const Tensor ctilde = concircular(b.R, b.r, g);
  std::optional<Tensor> weyl_c;
  if (m >= 3) weyl_c = weyl(b, g);

  std::optional<NullityFit> fit;
  int n = frame.contact_n();

  rep.has_contact = frame.contact.has_value();
  if (frame.contact) {
    const AxiomReport ax = check_contact_axioms(frame);
    for (const NamedCheck& c : ax.checks) {
      rep.axioms.push_back(CheckReport{c.id, c.holds, c.witness});
      if (!c.holds) {
        Diagnostic d;
        d.severity = "error";
        d.section = "contact";
        d.code = "contact_axiom_failed";
        d.message = "contact axiom '" + c.id + "' fails";
        d.witness = c.witness;
        rep.diagnostics.push_back(std::move(d));
      }
    }
    const Tensor h = compute_h(frame);
    rep.h = sparse_of(h);
    const AxiomReport hid = check_h_identities(frame, h, b.conn);
    for (const NamedCheck& c : hid.checks) {
      rep.h_identities.push_back(CheckReport{c.id, c.holds, c.witness});
      if (!c.holds) {
        Diagnostic d;
        d.severity = "error";
        d.section = "contact";
        d.code = "h_identity_failed";
        d.message = "h identity '" + c.id + "' fails";
        d.witness = c.witness;
        rep.diagnostics.push_back(std::move(d));
      }
    }
    const SasakiReport sk = sasakian_and_kcontact(frame, b);
    rep.sasakian = sk.sasakian;
    rep.sasakian_witness = sk.sasakian_witness;
    rep.k_contact = sk.k_contact;
    rep.k_contact_witness = sk.k_contact_witness;

    fit = fit_kappa_mu(frame, b, h);
    NullityReport nr;
    nr.global_fit = fit->global_fit;
    if (fit->kappa) nr.kappa = fit->kappa->str();
    if (fit->mu) nr.mu = fit->mu->str();
    nr.mu_indeterminate = fit->mu_indeterminate;
    for (const auto& [pair, k] : fit->per_pair) {
      PerPairKappa p;
      p.pair = pair;
      if (k) p.kappa = k->str();
      nr.per_pair.push_back(std::move(p));
    }
    nr.witness = fit->witness;
    rep.nullity = std::move(nr);

    const Tensor eta = eta_of(frame);
    const auto ee = fit->global_fit
                        ? eta_einstein_fit(b.S, g, eta, fit->kappa, b.r, n)
                        : eta_einstein_fit(b.S, g, eta);
    EtaEinsteinReport er;
    er.c1 = ee.c1.str();
    er.c2 = ee.c2.str();
    er.exact = ee.exact;
    er.witness = ee.witness;
    er.closed_form_match = ee.closed_form_match;
    er.trace_r_ok = ee.trace_r_ok;
    er.trace_kappa_ok = ee.trace_kappa_ok;
    rep.eta_einstein = std::move(er);

    const auto suite = identity_suite(frame, b, h, *fit);
    for (const auto& idr : suite) {
      IdentityReport ir;
      ir.id = idr.id;
      ir.status = idr.status == IdentityStatus::Pass   ? "pass"
                  : idr.status == IdentityStatus::Fail ? "fail"
                                                       : "out_of_hypothesis";
      ir.witness = idr.witness;
      if (idr.status == IdentityStatus::Fail) {
        Diagnostic d;
        d.severity = "error";
        d.section = "identities";
        d.code = "identity_failed";
        d.message = "nullity identity '" + idr.id + "' fails with the fitted kappa";
        d.witness = idr.witness;
        rep.diagnostics.push_back(std::move(d));
      }
      rep.identities.push_back(std::move(ir));
    }

    for (ConditionKind kind : {ConditionKind::CtildeXiCtilde, ConditionKind::CtildeXiR,
                               ConditionKind::CtildeXiS, ConditionKind::CtildeXiC}) {
      if (kind == ConditionKind::CtildeXiC && !weyl_c) continue;
      const ConditionVerdict v =
          check_curvature_condition(kind, frame, b, ctilde, weyl_c ? &*weyl_c : nullptr);
      rep.conditions.push_back(ConditionReport{v.id, v.holds, v.witness, "n/a", std::nullopt,
                                               std::nullopt});
    }
  }

  if (weyl_c) {
    const ConditionVerdict cds =
        check_curvature_condition(ConditionKind::CdotS, frame, b, ctilde, &*weyl_c);
    rep.conditions.push_back(
        ConditionReport{cds.id, cds.holds, cds.witness, "n/a", std::nullopt, std::nullopt});

    const ConditionVerdict ps = pseudosymmetry_fit(
        b, *weyl_c, g, fit && fit->global_fit ? fit->kappa : std::nullopt, mode);
    ConditionReport pr;
    pr.id = ps.id;
    pr.holds = ps.holds;
    pr.witness = ps.witness;
    pr.fc_status = ps.fc_status == FcStatus::Indeterminate ? "indeterminate"
                   : ps.fc_status == FcStatus::Fitted      ? "fitted"
                   : ps.fc_status == FcStatus::NoFit       ? "no_fit"
                                                           : "n/a";
    if (ps.f_c) pr.f_c = ps.f_c->str();
    pr.f_c_is_minus_kappa = ps.f_c_is_minus_kappa;
    rep.conditions.push_back(std::move(pr));

    if (fit && fit->global_fit && fit->kappa && n >= 1) {
      rep.s_square = [&] {
        const SSquareReport s = s_square_formula_check(b, g, *fit->kappa, n, cds.holds);
        SSquareSection sec;
        sec.status = s.status == SSquareStatus::Holds             ? "holds"
                     : s.status == SSquareStatus::Fails           ? "fails"
                     : s.status == SSquareStatus::OutOfHypothesis ? "out_of_hypothesis"
                                                                  : "premise_not_satisfied";
        sec.equality_holds = s.equality_holds;
        sec.witness = s.witness;
        return sec;
      }();
    }
  }

  if (fit && fit->global_fit) {
    rep.r_ctilde_equals_r_r = r_ctilde_equals_r_r(b, ctilde, g, mode);
    if (*fit->kappa < Rational(1) && (fit->mu || fit->mu_indeterminate)) {
      // an indeterminate mu leaves the invariant undefined; report only a
      // determinate one
      if (fit->mu)
        rep.boeckx_invariant_approx = approx_str(boeckx_invariant(*fit->kappa, *fit->mu));
    }
  }

  // branch annotations
  if (fit && fit->global_fit && fit->kappa) {
    const Rational kappa = *fit->kappa;
    if (kappa == Rational(1))
      rep.branches.push_back("kappa = 1: Sasakian class");
    if (kappa == Rational(0))
      rep.branches.push_back(
          "kappa = 0: consistent with the E^{n+1}(0) x S^n(4) product model (flat when n = 1)");
    if (n > 1 && kappa == Rational(1) - Rational(1, n))
      rep.branches.push_back("kappa = 1 - 1/n: boundary nullity class of the derivation conditions");
    if (ccf.c && *ccf.c == -Rational(1) * kappa && kappa.sign() != 0)
      rep.branches.push_back(
          "constant curvature -kappa: consistent with the hyperbolic model H^{2n+1}(-kappa)");
  }
  if (ccf.c) rep.branches.push_back("constant curvature " + ccf.c->str() + " on this frame");
  if (rep.einstein && rep.has_contact) rep.branches.push_back("Einstein contact frame");

  // reference-table audit
  if (refs) {
    if (refs->h && frame.contact) {
      const Tensor h = compute_h(frame);
      for (int i = 0; i < m; ++i) {
        Tensor wv = Tensor::vec(m), hv = Tensor::vec(m);
        for (int o = 0; o < m; ++o) {
          wv(o) = (*refs->h)(i, o);
          hv(o) = h(i, o);
        }
        if (wv == hv) continue;
        Diagnostic d;
        d.severity = "warning";
        d.section = "contact";
        d.code = "reference_h_mismatch";
        d.message = "reference table lists a different h(e" + std::to_string(i + 1) +
                    ") than the derived operator";
        d.witness = {i + 1};
        d.expected = format_vector(wv);
        d.computed = format_vector(hv);
        rep.diagnostics.push_back(std::move(d));
      }
    }
    for (const auto& [where, want] : refs->curvature) {
      const Tensor got = curvature_vec(b.R, where[0] - 1, where[1] - 1, where[2] - 1);
      if (got == want) continue;
      Diagnostic d;
      d.severity = "warning";
      d.section = "curvature";
      d.code = "reference_curvature_mismatch";
      d.message = "reference table lists a different R(e" + std::to_string(where[0]) + ",e" +
                  std::to_string(where[1]) + ")e" + std::to_string(where[2]) +
                  " than the computed tensor";
      d.witness = {where[0], where[1], where[2]};
      d.expected = format_vector(want);
      d.computed = format_vector(got);
      rep.diagnostics.push_back(std::move(d));
    }
  }

  return rep;
}

}  // namespace curvwb
