#include "curvwb/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "curvwb/classify.hpp"
#include "curvwb/manifold_io.hpp"
#include "curvwb/report.hpp"

namespace curvwb {

namespace {

struct CommonOpts {
  std::string input;
  std::string fixture;
  std::vector<std::string> sets;
  bool use_paper_connection = false;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--input", o.input, "frame specification file (JSON)");
  cmd->add_option("--fixture", o.fixture, "built-in fixture name (see 'fixtures')");
  cmd->add_option("--set", o.sets, "bind a parameter, NAME=RATIONAL (repeatable)")
      ->type_name("NAME=RATIONAL");
  cmd->add_flag("--use-paper-connection", o.use_paper_connection,
                "activate the connection table carried by the input instead of the Koszul one");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
}

std::map<std::string, Rational> parse_sets(const std::vector<std::string>& sets) {
  std::map<std::string, Rational> out;
  for (const std::string& s : sets) {
    const std::size_t eq = s.find('=');
    if (eq == std::string::npos || eq == 0)
      throw input_error("--set expects NAME=RATIONAL, got '" + s + "'");
    out[s.substr(0, eq)] = Rational::parse(s.substr(eq + 1));
  }
  return out;
}

struct LoadedFrame {
  FrameSpec frame;
  std::string input_id;
  std::optional<ReferenceTables> refs;
};

LoadedFrame load_frame(const CommonOpts& o) {
  if (o.input.empty() == o.fixture.empty())
    throw input_error("exactly one of --input or --fixture is required");
  const auto params = parse_sets(o.sets);
  if (!o.fixture.empty()) {
    LoadedFrame lf{builtin_fixture(o.fixture, params), "fixture:" + o.fixture,
                   fixture_reference_tables(o.fixture, params)};
    if (o.use_paper_connection) {
      if (!lf.frame.connection_override)
        throw input_error("--use-paper-connection: fixture '" + o.fixture +
                          "' carries no connection table");
      lf.frame.use_override = true;
    }
    return lf;
  }
  std::ifstream in(o.input);
  if (!in) throw input_error("cannot open '" + o.input + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  LoadedFrame lf{parse_manifold_file(buf.str(), params), "file:" + o.input, std::nullopt};
  if (o.use_paper_connection) {
    if (!lf.frame.connection_override)
      throw input_error("--use-paper-connection: input carries no connection table");
    lf.frame.use_override = true;
  }
  return lf;
}

// Scoped subcommands render (and exit on) only the diagnostics their
// sections own; classify renders the full report.
int finish(const ClassificationReport& rep, const CommonOpts& o,
           const std::vector<std::string>& scope, std::ostream& out,
           const std::string& text_body) {
  if (o.format == "structured") {
    ClassificationReport scoped = rep;
    scoped.diagnostics.clear();
    for (const Diagnostic& d : rep.diagnostics)
      for (const std::string& s : scope)
        if (d.section == s) {
          scoped.diagnostics.push_back(d);
          break;
        }
    out << render_structured(scoped).dump(2) << "\n";
  } else {
    out << text_body;
  }
  return rep.has_error(scope) ? 1 : 0;
}

std::string text_check(const ClassificationReport& rep) {
  std::ostringstream os;
  os << "input: " << rep.input_id << "\n";
  os << "connection source: " << rep.connection_source << "\n";
  os << "torsion-free: " << (rep.torsion_free ? "yes" : "no") << "\n";
  os << "metric-compatible: " << (rep.metric_compatible ? "yes" : "no") << "\n";
  if (rep.has_contact) {
    for (const auto& a : rep.axioms) {
      os << "axiom " << a.id << ": " << (a.holds ? "pass" : "FAIL");
      if (!a.holds && !a.witness.empty()) {
        os << " (witness ";
        for (std::size_t i = 0; i < a.witness.size(); ++i)
          os << (i ? "," : "") << "e" << a.witness[i];
        os << ")";
      }
      os << "\n";
    }
    for (const auto& c : rep.h_identities)
      os << "h identity " << c.id << ": " << (c.holds ? "pass" : "FAIL") << "\n";
  } else {
    os << "contact data: none\n";
  }
  for (const auto& d : rep.diagnostics)
    if (d.section == "connection" || d.section == "contact") {
      os << d.severity << " [" << d.code << "]: " << d.message;
      if (!d.expected.empty()) os << " expected " << d.expected << ", computed " << d.computed;
      os << "\n";
    }
  return os.str();
}

std::string text_curvature(const ClassificationReport& rep,
                           const std::vector<int>& component) {
  std::ostringstream os;
  os << "input: " << rep.input_id << "\n";
  os << "connection source: " << rep.connection_source << "\n";
  if (!component.empty()) {
    const int i = component[0], j = component[1], k = component[2];
    os << "R(e" << i << ",e" << j << ")e" << k << " =";
    bool any = false;
    for (const auto& e : rep.curvature)
      if (e.idx[0] == i && e.idx[1] == j && e.idx[2] == k) {
        os << " " << e.value << "*e" << e.idx[3];
        any = true;
      }
    os << (any ? "" : " 0") << "\n";
    return os.str();
  }
  os << "nonzero connection coefficients (nabla_{e_i} e_j = sum Gamma^k e_k):\n";
  for (const auto& e : rep.gamma)
    os << "  Gamma(" << e.idx[0] << "," << e.idx[1] << ")^" << e.idx[2] << " = " << e.value
       << "\n";
  os << "nonzero curvature components R(e_i,e_j)e_k:\n";
  for (const auto& e : rep.curvature)
    os << "  R(" << e.idx[0] << "," << e.idx[1] << "," << e.idx[2] << ")^" << e.idx[3] << " = "
       << e.value << "\n";
  os << "nonzero Ricci components:\n";
  for (const auto& e : rep.ricci)
    os << "  S(" << e.idx[0] << "," << e.idx[1] << ") = " << e.value << "\n";
  os << "scalar curvature: r = " << rep.scalar_curvature << "\n";
  os << "flat: " << (rep.flat ? "yes" : "no") << "\n";
  return os.str();
}

std::string text_identities(const ClassificationReport& rep) {
  std::ostringstream os;
  os << "input: " << rep.input_id << "\n";
  if (!rep.nullity || !rep.nullity->global_fit) {
    os << "identity suite skipped: no global kappa fit\n";
    return os.str();
  }
  os << "kappa = " << rep.nullity->kappa.value_or("?") << "\n";
  for (const auto& c : rep.identities) {
    os << "identity " << c.id << ": " << c.status;
    if (!c.witness.empty()) {
      os << " (witness ";
      for (std::size_t i = 0; i < c.witness.size(); ++i)
        os << (i ? "," : "") << "e" << c.witness[i];
      os << ")";
    }
    os << "\n";
  }
  return os.str();
}

std::string text_theorems(const ClassificationReport& rep) {
  std::ostringstream os;
  os << "input: " << rep.input_id << "\n";
  for (const auto& c : rep.conditions) {
    os << "condition " << c.id << ": " << (c.holds ? "holds" : "fails");
    if (!c.witness.empty()) {
      os << " (witness ";
      for (std::size_t i = 0; i < c.witness.size(); ++i)
        os << (i ? "," : "") << "e" << c.witness[i];
      os << ")";
    }
    if (c.fc_status == "fitted") os << " [f_C = " << c.f_c.value_or("?") << "]";
    if (c.fc_status == "indeterminate") os << " [f_C indeterminate]";
    if (c.f_c_is_minus_kappa)
      os << " [f_C == -kappa: " << (*c.f_c_is_minus_kappa ? "yes" : "no") << "]";
    os << "\n";
  }
  if (rep.s_square)
    os << "s-square formula: " << rep.s_square->status << "\n";
  if (rep.r_ctilde_equals_r_r)
    os << "R.concircular == R.R: " << (*rep.r_ctilde_equals_r_r ? "yes" : "no") << "\n";
  if (rep.conditions.empty()) os << "no conditions computable for this input\n";
  return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact curvature workbench for homogeneous frames"};
  app.require_subcommand(1);

  CommonOpts check_o, curv_o, id_o, thm_o, cls_o;
  std::vector<int> component;

  CLI::App* c_check = app.add_subcommand("check", "contact axioms and connection invariants");
  add_common(c_check, check_o);
  CLI::App* c_curv = app.add_subcommand("curvature", "connection, curvature, Ricci and r");
  add_common(c_curv, curv_o);
  c_curv->add_option("--component", component, "print only R(e_i,e_j)e_k (three 1-based indices)")
      ->expected(3);
  CLI::App* c_id = app.add_subcommand("identities", "nullity identity suite");
  add_common(c_id, id_o);
  CLI::App* c_thm = app.add_subcommand("theorems", "curvature-condition verdicts and f_C fit");
  add_common(c_thm, thm_o);
  CLI::App* c_cls = app.add_subcommand("classify", "full classification report");
  add_common(c_cls, cls_o);
  CLI::App* c_fix = app.add_subcommand("fixtures", "list built-in fixtures");

  std::vector<const char*> argv;
  argv.push_back("curvwb");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream dummy;
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (c_fix->parsed()) {
      for (const FixtureInfo& fi : fixture_infos()) {
        out << fi.name;
        if (!fi.required_params.empty()) {
          out << " (requires";
          for (const auto& p : fi.required_params) out << " --set " << p << "=...";
          out << ")";
        }
        out << "\n  " << fi.summary << "\n";
      }
      return 0;
    }
    if (c_check->parsed()) {
      LoadedFrame lf = load_frame(check_o);
      const ClassificationReport rep =
          classify(lf.frame, lf.input_id, lf.refs ? &*lf.refs : nullptr);
      return finish(rep, check_o, {"connection", "contact"}, out, text_check(rep));
    }
    if (c_curv->parsed()) {
      LoadedFrame lf = load_frame(curv_o);
      for (int v : component)
        if (v < 1 || v > lf.frame.dim)
          throw input_error("--component indices must be in 1.." + std::to_string(lf.frame.dim));
      const ClassificationReport rep =
          classify(lf.frame, lf.input_id, lf.refs ? &*lf.refs : nullptr);
      return finish(rep, curv_o, {"connection"}, out, text_curvature(rep, component));
    }
    if (c_id->parsed()) {
      LoadedFrame lf = load_frame(id_o);
      if (!lf.frame.contact)
        throw input_error("the identity suite needs contact data on the input frame");
      const ClassificationReport rep =
          classify(lf.frame, lf.input_id, lf.refs ? &*lf.refs : nullptr);
      return finish(rep, id_o, {"identities"}, out, text_identities(rep));
    }
    if (c_thm->parsed()) {
      LoadedFrame lf = load_frame(thm_o);
      const ClassificationReport rep =
          classify(lf.frame, lf.input_id, lf.refs ? &*lf.refs : nullptr);
      return finish(rep, thm_o, {"theorems"}, out, text_theorems(rep));
    }
    // classify
    LoadedFrame lf = load_frame(cls_o);
    const ClassificationReport rep =
        classify(lf.frame, lf.input_id, lf.refs ? &*lf.refs : nullptr);
    if (cls_o.format == "structured") {
      out << render_structured(rep).dump(2) << "\n";
    } else {
      out << render_text(rep);
    }
    return rep.has_any_error() ? 1 : 0;
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace curvwb
