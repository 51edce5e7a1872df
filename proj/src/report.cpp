#include "curvwb/report.hpp"

#include <sstream>

namespace curvwb {

using nlohmann::ordered_json;

std::string severity_str(Severity s) {
  switch (s) {
    case Severity::Info: return "info";
    case Severity::Warning: return "warning";
    case Severity::Error: return "error";
  }
  return "?";
}

Severity severity_from(const std::string& s) {
  if (s == "info") return Severity::Info;
  if (s == "warning") return Severity::Warning;
  if (s == "error") return Severity::Error;
  throw input_error("unknown severity '" + s + "'");
}

bool ClassificationReport::has_error(const std::vector<std::string>& sections) const {
  for (const Diagnostic& d : diagnostics) {
    if (d.severity != "error") continue;
    for (const std::string& s : sections)
      if (d.section == s) return true;
  }
  return false;
}

bool ClassificationReport::has_any_error() const {
  for (const Diagnostic& d : diagnostics)
    if (d.severity == "error") return true;
  return false;
}

std::string format_vector(const Tensor& v) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < v.dim(); ++i) {
    const Rational& c = v(i);
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    first = false;
    Rational a = c.sign() < 0 ? -c : c;
    if (a != Rational(1)) os << a.str() << "*";
    os << "e" << (i + 1);
  }
  if (first) return "0";
  return os.str();
}

namespace {

ordered_json to_json(const std::vector<int>& w) { return ordered_json(w); }

ordered_json to_json(const SparseEntry& e) {
  return ordered_json{{"idx", e.idx}, {"value", e.value}};
}

ordered_json to_json(const CheckReport& c) {
  return ordered_json{{"id", c.id}, {"holds", c.holds}, {"witness", c.witness}};
}

ordered_json to_json(const IdentityReport& c) {
  return ordered_json{{"id", c.id}, {"status", c.status}, {"witness", c.witness}};
}

ordered_json opt_str(const std::optional<std::string>& s) {
  return s ? ordered_json(*s) : ordered_json(nullptr);
}

ordered_json opt_bool(const std::optional<bool>& b) {
  return b ? ordered_json(*b) : ordered_json(nullptr);
}

ordered_json to_json(const ConditionReport& c) {
  return ordered_json{{"id", c.id},
                      {"holds", c.holds},
                      {"witness", c.witness},
                      {"fc_status", c.fc_status},
                      {"f_c", opt_str(c.f_c)},
                      {"f_c_is_minus_kappa", opt_bool(c.f_c_is_minus_kappa)}};
}

ordered_json to_json(const Diagnostic& d) {
  return ordered_json{{"severity", d.severity}, {"section", d.section},
                      {"code", d.code},         {"message", d.message},
                      {"witness", d.witness},   {"expected", d.expected},
                      {"computed", d.computed}};
}

template <class T>
std::vector<T> list_from(const ordered_json& j, T (*one)(const ordered_json&)) {
  std::vector<T> out;
  for (const auto& e : j) out.push_back(one(e));
  return out;
}

SparseEntry sparse_from(const ordered_json& j) {
  return SparseEntry{j.at("idx").get<std::vector<int>>(), j.at("value").get<std::string>()};
}

CheckReport check_from(const ordered_json& j) {
  return CheckReport{j.at("id").get<std::string>(), j.at("holds").get<bool>(),
                     j.at("witness").get<std::vector<int>>()};
}

IdentityReport identity_from(const ordered_json& j) {
  return IdentityReport{j.at("id").get<std::string>(), j.at("status").get<std::string>(),
                        j.at("witness").get<std::vector<int>>()};
}

std::optional<std::string> opt_str_from(const ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::string>();
}

std::optional<bool> opt_bool_from(const ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<bool>();
}

ConditionReport condition_from(const ordered_json& j) {
  ConditionReport c;
  c.id = j.at("id").get<std::string>();
  c.holds = j.at("holds").get<bool>();
  c.witness = j.at("witness").get<std::vector<int>>();
  c.fc_status = j.at("fc_status").get<std::string>();
  c.f_c = opt_str_from(j.at("f_c"));
  c.f_c_is_minus_kappa = opt_bool_from(j.at("f_c_is_minus_kappa"));
  return c;
}

Diagnostic diagnostic_from(const ordered_json& j) {
  Diagnostic d;
  d.severity = j.at("severity").get<std::string>();
  d.section = j.at("section").get<std::string>();
  d.code = j.at("code").get<std::string>();
  d.message = j.at("message").get<std::string>();
  d.witness = j.at("witness").get<std::vector<int>>();
  d.expected = j.at("expected").get<std::string>();
  d.computed = j.at("computed").get<std::string>();
  return d;
}

}  // namespace

nlohmann::ordered_json render_structured(const ClassificationReport& rep) {
  ordered_json j;
  j["input"] = rep.input_id;
  j["dimension"] = rep.dim;
  ordered_json conn;
  conn["source"] = rep.connection_source;
  conn["torsion_free"] = rep.torsion_free;
  conn["torsion_witness"] = to_json(rep.torsion_witness);
  conn["metric_compatible"] = rep.metric_compatible;
  conn["compat_witness"] = to_json(rep.compat_witness);
  ordered_json gamma = ordered_json::array();
  for (const auto& e : rep.gamma) gamma.push_back(to_json(e));
  conn["gamma"] = std::move(gamma);
  j["connection"] = std::move(conn);

  ordered_json curv = ordered_json::array();
  for (const auto& e : rep.curvature) curv.push_back(to_json(e));
  j["curvature"] = std::move(curv);
  ordered_json ric = ordered_json::array();
  for (const auto& e : rep.ricci) ric.push_back(to_json(e));
  j["ricci"] = std::move(ric);
  j["scalar_curvature"] = rep.scalar_curvature;
  j["flat"] = rep.flat;
  j["constant_curvature"] = opt_str(rep.constant_curvature);
  j["einstein"] = rep.einstein;

  j["has_contact"] = rep.has_contact;
  ordered_json ax = ordered_json::array();
  for (const auto& c : rep.axioms) ax.push_back(to_json(c));
  j["axioms"] = std::move(ax);
  ordered_json h = ordered_json::array();
  for (const auto& e : rep.h) h.push_back(to_json(e));
  j["h"] = std::move(h);
  ordered_json hid = ordered_json::array();
  for (const auto& c : rep.h_identities) hid.push_back(to_json(c));
  j["h_identities"] = std::move(hid);
  j["sasakian"] = opt_bool(rep.sasakian);
  j["sasakian_witness"] = to_json(rep.sasakian_witness);
  j["k_contact"] = opt_bool(rep.k_contact);
  j["k_contact_witness"] = to_json(rep.k_contact_witness);

  if (rep.nullity) {
    ordered_json n;
    n["global_fit"] = rep.nullity->global_fit;
    n["kappa"] = opt_str(rep.nullity->kappa);
    n["mu"] = opt_str(rep.nullity->mu);
    n["mu_indeterminate"] = rep.nullity->mu_indeterminate;
    ordered_json pp = ordered_json::array();
    for (const auto& p : rep.nullity->per_pair)
      pp.push_back(ordered_json{{"pair", p.pair}, {"kappa", opt_str(p.kappa)}});
    n["per_pair"] = std::move(pp);
    n["witness"] = to_json(rep.nullity->witness);
    j["nullity"] = std::move(n);
  } else {
    j["nullity"] = nullptr;
  }

  if (rep.eta_einstein) {
    const auto& e = *rep.eta_einstein;
    j["eta_einstein"] = ordered_json{{"c1", e.c1},
                                     {"c2", e.c2},
                                     {"exact", e.exact},
                                     {"witness", e.witness},
                                     {"closed_form_match", opt_bool(e.closed_form_match)},
                                     {"trace_r_ok", opt_bool(e.trace_r_ok)},
                                     {"trace_kappa_ok", opt_bool(e.trace_kappa_ok)}};
  } else {
    j["eta_einstein"] = nullptr;
  }

  ordered_json ids = ordered_json::array();
  for (const auto& c : rep.identities) ids.push_back(to_json(c));
  j["identities"] = std::move(ids);
  ordered_json conds = ordered_json::array();
  for (const auto& c : rep.conditions) conds.push_back(to_json(c));
  j["conditions"] = std::move(conds);

  if (rep.s_square) {
    j["s_square"] = ordered_json{{"status", rep.s_square->status},
                                 {"equality_holds", rep.s_square->equality_holds},
                                 {"witness", rep.s_square->witness}};
  } else {
    j["s_square"] = nullptr;
  }
  j["r_ctilde_equals_r_r"] = opt_bool(rep.r_ctilde_equals_r_r);
  j["boeckx_invariant_approx"] = opt_str(rep.boeckx_invariant_approx);
  j["branches"] = rep.branches;
  ordered_json diags = ordered_json::array();
  for (const auto& d : rep.diagnostics) diags.push_back(to_json(d));
  j["diagnostics"] = std::move(diags);
  return j;
}

ClassificationReport parse_structured(const nlohmann::ordered_json& j) {
  ClassificationReport rep;
  rep.input_id = j.at("input").get<std::string>();
  rep.dim = j.at("dimension").get<int>();
  const auto& conn = j.at("connection");
  rep.connection_source = conn.at("source").get<std::string>();
  rep.torsion_free = conn.at("torsion_free").get<bool>();
  rep.torsion_witness = conn.at("torsion_witness").get<std::vector<int>>();
  rep.metric_compatible = conn.at("metric_compatible").get<bool>();
  rep.compat_witness = conn.at("compat_witness").get<std::vector<int>>();
  rep.gamma = list_from(conn.at("gamma"), sparse_from);
  rep.curvature = list_from(j.at("curvature"), sparse_from);
  rep.ricci = list_from(j.at("ricci"), sparse_from);
  rep.scalar_curvature = j.at("scalar_curvature").get<std::string>();
  rep.flat = j.at("flat").get<bool>();
  rep.constant_curvature = opt_str_from(j.at("constant_curvature"));
  rep.einstein = j.at("einstein").get<bool>();
  rep.has_contact = j.at("has_contact").get<bool>();
  rep.axioms = list_from(j.at("axioms"), check_from);
  rep.h = list_from(j.at("h"), sparse_from);
  rep.h_identities = list_from(j.at("h_identities"), check_from);
  rep.sasakian = opt_bool_from(j.at("sasakian"));
  rep.sasakian_witness = j.at("sasakian_witness").get<std::vector<int>>();
  rep.k_contact = opt_bool_from(j.at("k_contact"));
  rep.k_contact_witness = j.at("k_contact_witness").get<std::vector<int>>();
  if (!j.at("nullity").is_null()) {
    const auto& n = j.at("nullity");
    NullityReport nr;
    nr.global_fit = n.at("global_fit").get<bool>();
    nr.kappa = opt_str_from(n.at("kappa"));
    nr.mu = opt_str_from(n.at("mu"));
    nr.mu_indeterminate = n.at("mu_indeterminate").get<bool>();
    for (const auto& p : n.at("per_pair"))
      nr.per_pair.push_back(PerPairKappa{p.at("pair").get<int>(), opt_str_from(p.at("kappa"))});
    nr.witness = n.at("witness").get<std::vector<int>>();
    rep.nullity = std::move(nr);
  }
  if (!j.at("eta_einstein").is_null()) {
    const auto& e = j.at("eta_einstein");
    EtaEinsteinReport er;
    er.c1 = e.at("c1").get<std::string>();
    er.c2 = e.at("c2").get<std::string>();
    er.exact = e.at("exact").get<bool>();
    er.witness = e.at("witness").get<std::vector<int>>();
    er.closed_form_match = opt_bool_from(e.at("closed_form_match"));
    er.trace_r_ok = opt_bool_from(e.at("trace_r_ok"));
    er.trace_kappa_ok = opt_bool_from(e.at("trace_kappa_ok"));
    rep.eta_einstein = std::move(er);
  }
  rep.identities = list_from(j.at("identities"), identity_from);
  rep.conditions = list_from(j.at("conditions"), condition_from);
  if (!j.at("s_square").is_null()) {
    const auto& s = j.at("s_square");
    rep.s_square = SSquareSection{s.at("status").get<std::string>(),
                                  s.at("equality_holds").get<bool>(),
                                  s.at("witness").get<std::vector<int>>()};
  }
  rep.r_ctilde_equals_r_r = opt_bool_from(j.at("r_ctilde_equals_r_r"));
  rep.boeckx_invariant_approx = opt_str_from(j.at("boeckx_invariant_approx"));
  rep.branches = j.at("branches").get<std::vector<std::string>>();
  rep.diagnostics = list_from(j.at("diagnostics"), diagnostic_from);
  return rep;
}

namespace {

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string witness_str(const std::vector<int>& w) {
  if (w.empty()) return "";
  std::ostringstream os;
  os << " (witness ";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << "e" << w[i];
  os << ")";
  return os.str();
}

}  // namespace

std::string render_text(const ClassificationReport& rep) {
  std::ostringstream os;
  os << "input: " << rep.input_id << "\n";
  os << "dimension: " << rep.dim << "\n";
  os << "connection: " << rep.connection_source
     << (rep.torsion_free ? ", torsion-free" : ", TORSIONED") << witness_str(rep.torsion_witness)
     << (rep.metric_compatible ? ", metric-compatible" : ", NOT metric-compatible")
     << witness_str(rep.compat_witness) << "\n";
  os << "scalar curvature: r = " << rep.scalar_curvature << "\n";
  os << "flat: " << yn(rep.flat) << "\n";
  if (rep.constant_curvature)
    os << "constant curvature: " << *rep.constant_curvature << "\n";
  else
    os << "constant curvature: no\n";
  if (rep.eta_einstein && rep.eta_einstein->exact)
    os << "einstein: " << yn(rep.einstein) << " (c1=" << rep.eta_einstein->c1
       << ", c2=" << rep.eta_einstein->c2 << ")\n";
  else
    os << "einstein: " << yn(rep.einstein) << "\n";
  if (rep.has_contact) {
    bool all = true;
    for (const auto& a : rep.axioms) all = all && a.holds;
    os << "contact axioms: " << (all ? "pass" : "FAIL") << "\n";
    for (const auto& a : rep.axioms)
      if (!a.holds) os << "  axiom " << a.id << ": fail" << witness_str(a.witness) << "\n";
    if (rep.sasakian) os << "sasakian: " << yn(*rep.sasakian) << "\n";
    if (rep.k_contact) os << "k-contact: " << yn(*rep.k_contact) << "\n";
    if (rep.nullity) {
      if (rep.nullity->global_fit) {
        os << "nullity fit: kappa = " << rep.nullity->kappa.value_or("?");
        if (rep.nullity->mu_indeterminate)
          os << ", mu = indeterminate";
        else
          os << ", mu = " << rep.nullity->mu.value_or("?");
        os << " (global fit)\n";
      } else {
        os << "nullity fit: none" << witness_str(rep.nullity->witness) << "\n";
      }
      for (const auto& p : rep.nullity->per_pair)
        os << "  pair (e" << p.pair << ", xi): kappa = " << (p.kappa ? *p.kappa : "no local fit")
           << "\n";
      if (!rep.nullity->global_fit)
        os << "identity suite: skipped (no global kappa fit)\n";
    }
  }
  for (const auto& c : rep.identities) {
    os << "identity " << c.id << ": " << c.status << witness_str(c.witness) << "\n";
  }
  for (const auto& c : rep.conditions) {
    os << "condition " << c.id << ": " << (c.holds ? "holds" : "fails")
       << witness_str(c.witness);
    if (c.fc_status == "fitted") os << " [f_C = " << c.f_c.value_or("?") << "]";
    if (c.fc_status == "indeterminate") os << " [f_C indeterminate]";
    if (c.f_c_is_minus_kappa) os << " [f_C == -kappa: " << yn(*c.f_c_is_minus_kappa) << "]";
    os << "\n";
  }
  if (rep.s_square)
    os << "s-square formula: " << rep.s_square->status
       << (rep.s_square->equality_holds ? " (equality holds)" : " (equality fails)")
       << witness_str(rep.s_square->witness) << "\n";
  if (rep.r_ctilde_equals_r_r)
    os << "R.concircular == R.R: " << yn(*rep.r_ctilde_equals_r_r) << "\n";
  if (rep.boeckx_invariant_approx)
    os << "boeckx invariant (approx): " << *rep.boeckx_invariant_approx << "\n";
  for (const auto& b : rep.branches) os << "branch: " << b << "\n";
  for (const auto& d : rep.diagnostics) {
    os << d.severity << " [" << d.code << "]: " << d.message << witness_str(d.witness);
    if (!d.expected.empty()) os << " expected " << d.expected << ", computed " << d.computed;
    os << "\n";
  }
  return os.str();
}

}  // namespace curvwb
