#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "curvwb/tensor.hpp"

namespace curvwb {

enum class Severity { Info, Warning, Error };

std::string severity_str(Severity s);
Severity severity_from(const std::string& s);

/// A machine-readable finding. Every failed check carries one, with the
/// witness indices (1-based) and, where useful, expected vs computed values.
struct Diagnostic {
  std::string severity;  // "info" | "warning" | "error"
  std::string section;   // which subcommand scope owns it
  std::string code;
  std::string message;
  std::vector<int> witness;
  std::string expected;
  std::string computed;
  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct SparseEntry {
  std::vector<int> idx;  // 1-based
  std::string value;
  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

struct CheckReport {
  std::string id;
  bool holds = true;
  std::vector<int> witness;
  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

struct IdentityReport {
  std::string id;
  std::string status;  // "pass" | "fail" | "out_of_hypothesis"
  std::vector<int> witness;
  friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

struct ConditionReport {
  std::string id;
  bool holds = true;
  std::vector<int> witness;
  std::string fc_status;  // "n/a" | "indeterminate" | "fitted" | "no_fit"
  std::optional<std::string> f_c;
  std::optional<bool> f_c_is_minus_kappa;
  friend bool operator==(const ConditionReport&, const ConditionReport&) = default;
};

struct PerPairKappa {
  int pair = 0;  // 1-based frame index i of the pair (e_i, ξ)
  std::optional<std::string> kappa;  // absent: no local fit
  friend bool operator==(const PerPairKappa&, const PerPairKappa&) = default;
};

struct NullityReport {
  bool global_fit = false;
  std::optional<std::string> kappa;
  std::optional<std::string> mu;
  bool mu_indeterminate = false;
  std::vector<PerPairKappa> per_pair;
  std::vector<int> witness;
  friend bool operator==(const NullityReport&, const NullityReport&) = default;
};

struct EtaEinsteinReport {
  std::string c1, c2;
  bool exact = false;
  std::vector<int> witness;
  std::optional<bool> closed_form_match;
  std::optional<bool> trace_r_ok;
  std::optional<bool> trace_kappa_ok;
  friend bool operator==(const EtaEinsteinReport&, const EtaEinsteinReport&) = default;
};

struct SSquareSection {
  std::string status;  // "holds" | "fails" | "out_of_hypothesis" | "premise_not_satisfied"
  bool equality_holds = false;
  std::vector<int> witness;
  friend bool operator==(const SSquareSection&, const SSquareSection&) = default;
};

/// Full structured verdict for one frame. Serialization is canonical:
/// fixed key order, rationals as canonical strings, 1-based indices.
struct ClassificationReport {
  std::string input_id;
  int dim = 0;
  std::string connection_source;  // "koszul" | "override"
  bool torsion_free = true;
  std::vector<int> torsion_witness;
  bool metric_compatible = true;
  std::vector<int> compat_witness;
  std::vector<SparseEntry> gamma;      // nonzero connection coefficients
  std::vector<SparseEntry> curvature;  // nonzero R components
  std::vector<SparseEntry> ricci;      // nonzero S components
  std::string scalar_curvature;
  bool flat = false;
  std::optional<std::string> constant_curvature;
  bool einstein = false;

  bool has_contact = false;
  std::vector<CheckReport> axioms;
  std::vector<SparseEntry> h;
  std::vector<CheckReport> h_identities;
  std::optional<bool> sasakian;
  std::vector<int> sasakian_witness;
  std::optional<bool> k_contact;
  std::vector<int> k_contact_witness;
  std::optional<NullityReport> nullity;
  std::optional<EtaEinsteinReport> eta_einstein;
  std::vector<IdentityReport> identities;
  std::vector<ConditionReport> conditions;
  std::optional<SSquareSection> s_square;
  std::optional<bool> r_ctilde_equals_r_r;
  std::optional<std::string> boeckx_invariant_approx;  // flagged approximate

  std::vector<std::string> branches;
  std::vector<Diagnostic> diagnostics;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;

  bool has_error(const std::vector<std::string>& sections) const;
  bool has_any_error() const;
};

nlohmann::ordered_json render_structured(const ClassificationReport& rep);
ClassificationReport parse_structured(const nlohmann::ordered_json& j);
std::string render_text(const ClassificationReport& rep);

/// "2*e1 - e3" style rendering of a frame vector; "0" when zero.
std::string format_vector(const Tensor& v);

}  // namespace curvwb
