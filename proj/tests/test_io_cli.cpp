#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "curvwb/classify.hpp"
#include "curvwb/cli.hpp"
#include "curvwb/geometry.hpp"
#include "curvwb/manifold_io.hpp"

using namespace curvwb;

namespace {

int cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
  std::ostringstream out, err;
  const int rc = run_cli(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return rc;
}

const char* k41_json = R"({
  "dimension": 3,
  "brackets": [
    {"i": 1, "j": 2, "components": {"3": "2"}},
    {"i": 2, "j": 3, "components": {"1": "2"}}
  ],
  "metric": "identity",
  "contact": {
    "xi": ["0", "0", "1"],
    "phi": [["0", "1", "0"], ["-1", "0", "0"], ["0", "0", "0"]]
  }
})";

}  // namespace

TEST_CASE("manifold file parses with antisymmetric completion") {
  const FrameSpec f = parse_manifold_file(k41_json);
  CHECK(f.dim == 3);
  CHECK(f.brackets(0, 1, 2) == Rational(2));
  CHECK(f.brackets(1, 0, 2) == Rational(-2));
  CHECK(f.brackets(1, 2, 0) == Rational(2));
  for (int k = 0; k < 3; ++k) CHECK(f.brackets(2, 0, k).is_zero());
  REQUIRE(f.contact.has_value());
  CHECK(f.contact->xi(2) == Rational(1));
  CHECK(f.contact->phi(0, 1) == Rational(1));
}

TEST_CASE("manifold file rejections") {
  // Jacobi violation with the failing triple
  const char* bad_jacobi = R"({
    "dimension": 3,
    "brackets": [
      {"i": 1, "j": 2, "components": {"3": "1"}},
      {"i": 2, "j": 3, "components": {"1": "1"}},
      {"i": 1, "j": 3, "components": {"3": "-1"}}
    ],
    "metric": "identity"
  })";
  try {
    parse_manifold_file(bad_jacobi);
    FAIL("expected Jacobi rejection");
  } catch (const input_error& e) {
    CHECK(std::string(e.what()).find("(1,2,3)") != std::string::npos);
  }

  const char* bad_metric = R"({"dimension": 2, "brackets": [],
    "metric": [["1", "2"], ["2", "1"]]})";
  CHECK_THROWS_AS(parse_manifold_file(bad_metric), input_error);

  const char* unknown_key = R"({"dimension": 2, "bracketss": []})";
  CHECK_THROWS_AS(parse_manifold_file(unknown_key), input_error);

  const char* wrong_orient = R"({"dimension": 3,
    "brackets": [{"i": 2, "j": 1, "components": {"3": "1"}}]})";
  CHECK_THROWS_AS(parse_manifold_file(wrong_orient), input_error);

  const char* dup = R"({"dimension": 3, "brackets": [
    {"i": 1, "j": 2, "components": {"3": "1"}},
    {"i": 1, "j": 2, "components": {"3": "-1"}}]})";
  CHECK_THROWS_AS(parse_manifold_file(dup), input_error);

  const char* bad_rat = R"({"dimension": 2, "brackets": [
    {"i": 1, "j": 2, "components": {"1": "1.5"}}]})";
  CHECK_THROWS_AS(parse_manifold_file(bad_rat), input_error);

  const char* unbound = R"({"dimension": 2, "brackets": [
    {"i": 1, "j": 2, "components": {"1": "lambda"}}]})";
  try {
    parse_manifold_file(unbound);
    FAIL("expected unbound-parameter rejection");
  } catch (const input_error& e) {
    CHECK(std::string(e.what()).find("lambda") != std::string::npos);
  }
}

TEST_CASE("parameter expressions and --set style overrides") {
  const char* with_params = R"({
    "dimension": 3,
    "brackets": [{"i": 1, "j": 2, "components": {"2": "-lambda", "3": "3*lambda/2"}}],
    "metric": "identity",
    "params": {"lambda": "2"}
  })";
  const FrameSpec f = parse_manifold_file(with_params);
  CHECK(f.brackets(0, 1, 1) == Rational(-2));
  CHECK(f.brackets(0, 1, 2) == Rational(3));
  const FrameSpec g = parse_manifold_file(with_params, {{"lambda", Rational(1, 2)}});
  CHECK(g.brackets(0, 1, 1) == Rational(-1, 2));
  CHECK(g.brackets(0, 1, 2) == Rational(3, 4));
}

TEST_CASE("parse(render(fixture)) round-trips every built-in fixture") {
  const std::map<std::string, Rational> none;
  std::map<std::string, Rational> p42{{"lambda", Rational(1)}};
  std::map<std::string, Rational> phyp{{"m", Rational(5)}, {"lambda", Rational(1, 2)}};
  std::map<std::string, Rational> pab{{"m", Rational(4)}};
  const std::vector<std::pair<std::string, std::map<std::string, Rational>>> all = {
      {"example-4.1", none},         {"example-4.2", p42},   {"su2-sasakian", none},
      {"abelian-flat", pab},         {"hyperbolic", phyp},   {"product-flat-sphere", none},
  };
  for (const auto& [name, params] : all) {
    const FrameSpec f = builtin_fixture(name, params);
    const std::string text = render_manifold_file(f);
    const FrameSpec g = parse_manifold_file(text);
    CHECK(g.dim == f.dim);
    CHECK(g.brackets == f.brackets);
    CHECK(g.metric == f.metric);
    CHECK(g.contact.has_value() == f.contact.has_value());
    if (f.contact) {
      CHECK(g.contact->xi == f.contact->xi);
      CHECK(g.contact->phi == f.contact->phi);
    }
    CHECK(g.connection_override.has_value() == f.connection_override.has_value());
    if (f.connection_override) CHECK(*g.connection_override == *f.connection_override);
  }
}

TEST_CASE("lambda substitution matches the closed form on the 5-dim example") {
  // R(e1,e2)e2 = -lambda^2 e1 under the Koszul connection, for several lambda
  for (const Rational& lam : {Rational(1), Rational(1, 2), Rational(3)}) {
    const FrameSpec f = builtin_fixture("example-4.2", {{"lambda", lam}});
    const GeometryBundle b = make_geometry(f);
    const Rational l2 = lam * lam;
    CHECK(b.R(0, 1, 1, 0) == -Rational(1) * l2);
    CHECK(b.R(0, 1, 0, 1) == l2);
    CHECK(b.R(0, 2, 2, 0) == -Rational(1) * l2);
  }
}

TEST_CASE("structured report round-trips on every fixture") {
  const std::vector<std::pair<std::string, std::map<std::string, Rational>>> all = {
      {"example-4.1", {}},
      {"example-4.2", {{"lambda", Rational(1)}}},
      {"su2-sasakian", {}},
      {"abelian-flat", {{"m", Rational(4)}}},
      {"hyperbolic", {{"m", Rational(3)}, {"lambda", Rational(1)}}},
      {"product-flat-sphere", {}},
  };
  for (const auto& [name, params] : all) {
    const FrameSpec f = builtin_fixture(name, params);
    const auto refs = fixture_reference_tables(name, params);
    const ClassificationReport rep = classify(f, "fixture:" + name, refs ? &*refs : nullptr);
    const auto j = render_structured(rep);
    const ClassificationReport back = parse_structured(j);
    CHECK(back == rep);
    // canonical rendering is byte-stable
    CHECK(render_structured(back).dump(2) == j.dump(2));
  }
}

TEST_CASE("cli: classify text output and exit codes") {
  std::string out;
  CHECK(cli({"classify", "--fixture", "example-4.1", "--format", "text"}, &out) == 0);
  CHECK(out.find("kappa = 0") != std::string::npos);
  CHECK(out.find("flat: yes") != std::string::npos);

  CHECK(cli({"classify", "--fixture", "su2-sasakian"}, &out) == 0);
  CHECK(out.find("sasakian: yes") != std::string::npos);
  CHECK(out.find("einstein: yes (c1=2, c2=0)") != std::string::npos);

  CHECK(cli({"check", "--fixture", "example-4.2", "--set", "lambda=1"}, &out) == 1);
  CHECK(out.find("d_eta_matches_phi") != std::string::npos);
  CHECK(out.find("e2,e4") != std::string::npos);
}

TEST_CASE("cli: usage errors exit 2") {
  std::string out, err;
  CHECK(cli({"classify", "--fixture", "no-such-fixture"}, &out, &err) == 2);
  CHECK(cli({"classify", "--fixture", "example-4.2"}, &out, &err) == 2);  // lambda missing
  CHECK(err.find("lambda") != std::string::npos);
  CHECK(cli({"classify", "--input", "/no/such/file.json"}, &out, &err) == 2);
  CHECK(cli({"classify"}, &out, &err) == 2);  // neither --input nor --fixture
  CHECK(cli({"classify", "--fixture", "example-4.1", "--use-paper-connection"}, &out, &err) ==
        2);  // no table carried
  CHECK(cli({"identities", "--fixture", "hyperbolic", "--set", "m=3", "--set", "lambda=1"},
            &out, &err) == 2);  // no contact data
  CHECK(cli({"nonsense"}, &out, &err) == 2);
  CHECK(cli({"classify", "--fixture", "example-4.1", "--set", "m"}, &out, &err) == 2);
}

TEST_CASE("cli: structured mode is byte-identical across runs") {
  for (const char* fixture : {"example-4.1", "su2-sasakian", "product-flat-sphere"}) {
    std::string a, b;
    CHECK(cli({"classify", "--fixture", fixture, "--format", "structured"}, &a) ==
          cli({"classify", "--fixture", fixture, "--format", "structured"}, &b));
    CHECK(a == b);
    CHECK(!a.empty());
  }
}

TEST_CASE("cli: exit 0 iff no error-severity diagnostics") {
  std::string out;
  const int rc = cli({"classify", "--fixture", "example-4.2", "--set", "lambda=1", "--format",
                      "structured"},
                     &out);
  CHECK(rc == 1);
  const auto j = nlohmann::ordered_json::parse(out);
  const ClassificationReport rep = parse_structured(j);
  bool any_error = false;
  for (const auto& d : rep.diagnostics) any_error = any_error || d.severity == "error";
  CHECK(any_error);

  std::string out2;
  const int rc2 = cli({"classify", "--fixture", "example-4.1", "--format", "structured"}, &out2);
  CHECK(rc2 == 0);
  const ClassificationReport rep2 = parse_structured(nlohmann::ordered_json::parse(out2));
  for (const auto& d : rep2.diagnostics) CHECK(d.severity != "error");
}

TEST_CASE("file input with connection_override drives the full override path") {
  // the 5-dim example serialized through the file format, override included
  const FrameSpec fx = builtin_fixture("example-4.2", {{"lambda", Rational(1)}});
  const std::string text = render_manifold_file(fx);
  const std::string path = "/tmp/curvwb_42.json";
  {
    std::ofstream out(path);
    out << text;
  }
  std::string a;
  CHECK(cli({"curvature", "--input", path, "--format", "structured"}, &a) == 1);
  const auto ja = nlohmann::ordered_json::parse(a);
  CHECK(ja.at("connection").at("source") == "koszul");
  std::string b;
  CHECK(cli({"curvature", "--input", path, "--use-paper-connection", "--format", "structured"},
            &b) == 1);
  const auto jb = nlohmann::ordered_json::parse(b);
  CHECK(jb.at("connection").at("source") == "override");
  CHECK(a != b);
}

TEST_CASE("malformed inputs are rejected as input errors, never crashes") {
  const char* cases[] = {
      "",
      "[]",
      "{",
      R"({"dimension": 3})",  // fine actually: abelian; accepted
      R"({"dimension": 1})",
      R"({"dimension": 99999999999999999999})",
      R"({"dimension": 3, "brackets": [{"i": 4294967298, "j": 2, "components": {"1": "1"}}]})",
      R"({"dimension": 3, "brackets": [{"i": 1, "j": 2, "components": {"99": "1"}}]})",
      R"({"dimension": 3, "brackets": [{"i": 1, "j": 2, "components": {"x": "1"}}]})",
      R"({"dimension": 3, "brackets": [{"i": 1, "j": 2}]})",
      R"({"dimension": 3, "metric": [["1"]]})",
      R"({"dimension": 2, "metric": [["1", "0"], ["0", "0"]]})",
      R"({"dimension": 3, "contact": {"xi": ["1"], "phi": []}})",
      R"({"dimension": 3, "contact": {"xi": ["1","0","0"], "phi": [], "extra": 1}})",
      R"({"dimension": 3, "params": {"lambda": "x"}})",
      R"({"dimension": 3, "brackets": [{"i": 1, "j": 2, "components": {"1": "1/0"}}]})",
  };
  int rejected = 0;
  for (const char* text : cases) {
    try {
      (void)parse_manifold_file(text);
    } catch (const input_error&) {
      ++rejected;
    }
  }
  CHECK(rejected == 15);  // every case except the bare abelian frame
}

TEST_CASE("the 5-dim example degenerates at lambda = 0") {
  const FrameSpec f = builtin_fixture("example-4.2", {{"lambda", Rational(0)}});
  CHECK(f.brackets.is_zero());
  const GeometryBundle b = make_geometry(f);
  CHECK(b.R.is_zero());
  // the contact structure still fails d_eta even on the abelian degeneration
  std::string out;
  CHECK(cli({"classify", "--fixture", "example-4.2", "--set", "lambda=0"}, &out) == 1);
  CHECK(out.find("flat: yes") != std::string::npos);
  CHECK(out.find("d_eta_matches_phi") != std::string::npos);
}

TEST_CASE("identity failures surface as error diagnostics and exit 1") {
  // flat frame with a doubled phi: kappa fit survives, tr h^2 identity breaks
  const char* broken = R"({
    "dimension": 3,
    "brackets": [
      {"i": 1, "j": 2, "components": {"3": "2"}},
      {"i": 2, "j": 3, "components": {"1": "2"}}
    ],
    "metric": "identity",
    "contact": {
      "xi": ["0", "0", "1"],
      "phi": [["0", "2", "0"], ["-2", "0", "0"], ["0", "0", "0"]]
    }
  })";
  const std::string path = "/tmp/curvwb_broken_phi.json";
  {
    std::ofstream out(path);
    out << broken;
  }
  std::string out;
  CHECK(cli({"identities", "--input", path}, &out) == 1);
  CHECK(out.find("trace_h_squared: fail") != std::string::npos);
}

TEST_CASE("a 2-dimensional frame classifies without the Weyl stack") {
  std::string out;
  CHECK(cli({"classify", "--fixture", "abelian-flat", "--set", "m=2"}, &out) == 0);
  CHECK(out.find("flat: yes") != std::string::npos);
  CHECK(out.find("pseudosymmetry") == std::string::npos);  // no Weyl tensor below dim 3
}

TEST_CASE("cli: fixtures subcommand lists the built-ins") {
  std::string out;
  CHECK(cli({"fixtures"}, &out) == 0);
  for (const char* name : {"example-4.1", "example-4.2", "su2-sasakian", "abelian-flat",
                           "hyperbolic", "product-flat-sphere"})
    CHECK(out.find(name) != std::string::npos);
}

TEST_CASE("cli: curvature --component filter") {
  std::string out;
  CHECK(cli({"curvature", "--fixture", "example-4.1", "--component", "2", "3", "3"}, &out) == 0);
  CHECK(out.find("R(e2,e3)e3 = 0") != std::string::npos);
  CHECK(cli({"curvature", "--fixture", "example-4.1", "--component", "9", "1", "1"}, &out) == 2);
}
