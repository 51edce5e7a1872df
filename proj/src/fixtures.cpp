#include "curvwb/fixtures.hpp"

namespace curvwb {

namespace {

Rational need_param(const std::map<std::string, Rational>& params, const std::string& key,
                    const std::string& fixture) {
  auto it = params.find(key);
  if (it == params.end())
    throw input_error("fixture '" + fixture + "' needs parameter '" + key +
                      "' (pass --set " + key + "=VALUE)");
  return it->second;
}

int need_dim(const std::map<std::string, Rational>& params, const std::string& fixture) {
  const long m = need_param(params, "m", fixture).to_long();
  if (m < 2 || m > 9) throw input_error("fixture '" + fixture + "': m must be in 2..9");
  return static_cast<int>(m);
}

Tensor brackets(int m) { return Tensor(m, {Slot::Lower, Slot::Lower, Slot::Upper}); }

void set_bracket(Tensor& c, int i, int j, int k, const Rational& v) {
  c(i - 1, j - 1, k - 1) = v;
  c(j - 1, i - 1, k - 1) = -Rational(1) * v;
}

Tensor vec(int m, int i) { return Tensor::basis_vec(m, i - 1); }

FrameSpec make_example_41() {
  Tensor c = brackets(3);
  set_bracket(c, 1, 2, 3, Rational(2));
  set_bracket(c, 2, 3, 1, Rational(2));
  FrameSpec f(3, std::move(c), Metric::identity(3));
  Tensor phi = Tensor::endo(3);
  phi(0, 1) = Rational(1);
  phi(1, 0) = Rational(-1);
  attach_contact(f, vec(3, 3), std::move(phi));
  return f;
}

FrameSpec make_example_42(const Rational& lam) {
  Tensor c = brackets(5);
  set_bracket(c, 1, 2, 2, -Rational(1) * lam);
  set_bracket(c, 1, 3, 3, -Rational(1) * lam);
  FrameSpec f(5, std::move(c), Metric::identity(5));
  Tensor phi = Tensor::endo(5);
  phi(1, 3) = Rational(1);
  phi(2, 4) = Rational(1);
  phi(3, 1) = Rational(-1);
  phi(4, 2) = Rational(-1);
  attach_contact(f, vec(5, 1), std::move(phi));
  // the published connection table for this example
  const Rational half = lam / Rational(2);
  Tensor ga(5, {Slot::Lower, Slot::Lower, Slot::Upper});
  ga(0, 4, 0) = Rational(1);                                 // e1: e5 -> e1
  ga(1, 0, 3) = Rational(-1); ga(1, 0, 1) = half;            // e2: e1 -> -e4 + (l/2) e2
  ga(1, 1, 0) = -Rational(1) * lam;                          // e2: e2 -> -l e1
  ga(2, 0, 4) = Rational(-1); ga(2, 0, 2) = half;            // e3: e1 -> -e5 + (l/2) e3
  ga(2, 2, 0) = -Rational(1) * lam;                          // e3: e3 -> -l e1
  ga(3, 0, 1) = Rational(1); ga(3, 0, 3) = -Rational(1) * half;  // e4: e1 -> e2 - (l/2) e4
  ga(4, 0, 2) = Rational(1); ga(4, 0, 4) = -Rational(1) * half;  // e5: e1 -> e3 - (l/2) e5
  attach_override(f, std::move(ga));
  return f;
}

FrameSpec make_su2() {
  Tensor c = brackets(3);
  set_bracket(c, 1, 2, 3, Rational(2));
  set_bracket(c, 2, 3, 1, Rational(2));
  set_bracket(c, 3, 1, 2, Rational(2));
  FrameSpec f(3, std::move(c), Metric::identity(3));
  Tensor phi = Tensor::endo(3);
  phi(0, 1) = Rational(1);
  phi(1, 0) = Rational(-1);
  attach_contact(f, vec(3, 3), std::move(phi));
  return f;
}

FrameSpec make_abelian(int m) { return FrameSpec(m, brackets(m), Metric::identity(m)); }

FrameSpec make_hyperbolic(int m, const Rational& lam) {
  Tensor c = brackets(m);
  for (int i = 2; i <= m; ++i) set_bracket(c, 1, i, i, -Rational(1) * lam);
  return FrameSpec(m, std::move(c), Metric::identity(m));
}

FrameSpec make_product_flat_sphere() {
  Tensor c = brackets(7);
  set_bracket(c, 5, 6, 7, Rational(4));
  set_bracket(c, 6, 7, 5, Rational(4));
  set_bracket(c, 7, 5, 6, Rational(4));
  return FrameSpec(7, std::move(c), Metric::identity(7));
}

Tensor scaled_vec(int m, int i, const Rational& s) {
  Tensor v = Tensor::vec(m);
  v(i - 1) = s;
  return v;
}

}  // namespace

const std::vector<FixtureInfo>& fixture_infos() {
  static const std::vector<FixtureInfo> infos = {
      {"example-4.1", {}, "3-dim flat contact frame ([e1,e2]=2e3, [e2,e3]=2e1), xi = e3"},
      {"example-4.2", {"lambda"},
       "5-dim contact frame ([e1,e2]=-l*e2, [e1,e3]=-l*e3) with a published connection table"},
      {"su2-sasakian", {}, "cyclic brackets [ei,ej]=2ek, round Sasakian 3-sphere frame"},
      {"abelian-flat", {"m"}, "m-dim abelian frame, identity metric (flat)"},
      {"hyperbolic", {"m", "lambda"}, "[e1,ei]=-l*ei for i>1: constant curvature -l^2"},
      {"product-flat-sphere", {}, "E^4(0) x S^3(4) block frame, dimension 7"},
  };
  return infos;
}

FrameSpec builtin_fixture(const std::string& name, const std::map<std::string, Rational>& params) {
  FrameSpec f = [&]() -> FrameSpec {
    if (name == "example-4.1") return make_example_41();
    if (name == "example-4.2") return make_example_42(need_param(params, "lambda", name));
    if (name == "su2-sasakian") return make_su2();
    if (name == "abelian-flat") return make_abelian(need_dim(params, name));
    if (name == "hyperbolic")
      return make_hyperbolic(need_dim(params, name), need_param(params, "lambda", name));
    if (name == "product-flat-sphere") return make_product_flat_sphere();
    throw input_error("unknown fixture '" + name + "' (see the fixtures subcommand)");
  }();
  f.params = params;
  return f;
}

std::optional<ReferenceTables> fixture_reference_tables(
    const std::string& name, const std::map<std::string, Rational>& params) {
  if (name == "example-4.1") {
    ReferenceTables refs;
    Tensor h = Tensor::endo(3);
    h(0, 0) = Rational(-1);
    h(1, 1) = Rational(2);  // printed value; the derived table has e2 here
    refs.h = std::move(h);
    refs.curvature = {
        {{2, 3, 3}, Tensor::vec(3)},
        {{2, 1, 3}, Tensor::vec(3)},
        {{1, 3, 3}, Tensor::vec(3)},
    };
    return refs;
  }
  if (name == "example-4.2") {
    const Rational lam = need_param(params, "lambda", name);
    const Rational l2 = lam * lam;
    const Rational half = lam / Rational(2);
    ReferenceTables refs;
    Tensor h = Tensor::endo(5);
    h(1, 3) = half;
    h(2, 4) = half;
    h(3, 1) = half;
    h(4, 2) = half;
    refs.h = std::move(h);
    const Tensor zero = Tensor::vec(5);
    refs.curvature = {
        {{1, 2, 1}, scaled_vec(5, 2, l2)},
        {{1, 2, 2}, scaled_vec(5, 1, -Rational(1) * l2)},
        {{1, 3, 1}, scaled_vec(5, 3, l2)},
        {{1, 3, 3}, scaled_vec(5, 1, -Rational(1) * l2)},
        {{1, 4, 1}, zero},
        {{1, 4, 4}, zero},
        {{1, 5, 1}, zero},
        {{1, 5, 5}, zero},
        {{2, 3, 2}, scaled_vec(5, 3, -Rational(1) * l2)},
        {{2, 3, 3}, scaled_vec(5, 2, -Rational(1) * l2)},
        {{2, 4, 2}, zero},
        {{2, 4, 4}, zero},
        {{2, 5, 2}, zero},
        {{2, 5, 5}, zero},
        {{3, 4, 3}, zero},
        {{3, 4, 4}, zero},
        {{3, 5, 3}, zero},
        {{3, 5, 5}, zero},
        {{4, 5, 4}, zero},
        {{4, 5, 5}, zero},
    };
    return refs;
  }
  return std::nullopt;
}

}  // namespace curvwb
