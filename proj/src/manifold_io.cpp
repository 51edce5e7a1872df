#include "curvwb/manifold_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <set>

namespace curvwb {

using nlohmann::ordered_json;

namespace {

bool looks_like_name(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

Rational parse_scalar(const std::string& text, const std::map<std::string, Rational>& params) {
  if (text.empty()) throw input_error("empty scalar entry");
  // plain rational unless a parameter name appears
  const bool has_name = std::any_of(text.begin(), text.end(),
                                    [](char c) { return looks_like_name(c); });
  if (!has_name) return Rational::parse(text);

  std::size_t pos = 0;
  bool neg = false;
  if (text[pos] == '-') { neg = true; ++pos; }
  Rational coef(1);
  if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    const std::size_t star = text.find('*', pos);
    if (star == std::string::npos)
      throw input_error("malformed scalar '" + text + "': coefficient without '*'");
    coef = Rational::parse(text.substr(pos, star - pos));
    pos = star + 1;
  }
  std::size_t name_start = pos;
  while (pos < text.size() &&
         (looks_like_name(text[pos]) || std::isdigit(static_cast<unsigned char>(text[pos]))))
    ++pos;
  const std::string name = text.substr(name_start, pos - name_start);
  if (name.empty() || !looks_like_name(name[0]))
    throw input_error("malformed scalar '" + text + "'");
  Rational den(1);
  if (pos < text.size()) {
    if (text[pos] != '/') throw input_error("malformed scalar '" + text + "'");
    den = Rational::parse(text.substr(pos + 1));
    if (den.sign() <= 0) throw input_error("malformed scalar '" + text + "': divisor must be positive");
  }
  auto it = params.find(name);
  if (it == params.end()) throw input_error("unbound parameter '" + name + "'");
  Rational v = coef * it->second / den;
  return neg ? -v : v;
}

namespace {

int index_in_range(const ordered_json& j, const char* key, int m) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw input_error(std::string("sparse entry needs integer '") + key + "'");
  const long long v = j.at(key).get<long long>();
  if (v < 1 || v > m)
    throw input_error(std::string("index '") + key + "' out of range 1.." + std::to_string(m));
  return static_cast<int>(v);
}

std::string scalar_text(const ordered_json& j, const char* where) {
  if (!j.is_string())
    throw input_error(std::string(where) + ": scalar entries must be rational strings");
  return j.get<std::string>();
}

}  // namespace

FrameSpec parse_manifold_file(const std::string& text,
                              const std::map<std::string, Rational>& extra_params) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw input_error("top level must be a JSON object");
  static const std::set<std::string> allowed = {"dimension", "brackets",           "metric",
                                                "contact",   "connection_override", "params"};
  for (const auto& [key, _] : j.items())
    if (!allowed.count(key)) throw input_error("unknown top-level key '" + key + "'");

  if (!j.contains("dimension") || !j.at("dimension").is_number_integer())
    throw input_error("missing integer 'dimension'");
  const long long dim_raw = j.at("dimension").get<long long>();
  if (dim_raw < 2 || dim_raw > 9) throw input_error("dimension must be in 2..9");
  const int m = static_cast<int>(dim_raw);

  // parameters: file-level bindings, overridden by the command line
  std::map<std::string, Rational> params;
  if (j.contains("params")) {
    if (!j.at("params").is_object()) throw input_error("'params' must be an object");
    for (const auto& [k, v] : j.at("params").items())
      params[k] = Rational::parse(scalar_text(v, "params"));
  }
  for (const auto& [k, v] : extra_params) params[k] = v;

  auto scalar = [&](const ordered_json& sj, const char* where) {
    return parse_scalar(scalar_text(sj, where), params);
  };

  Tensor c(m, {Slot::Lower, Slot::Lower, Slot::Upper});
  if (j.contains("brackets")) {
    if (!j.at("brackets").is_array()) throw input_error("'brackets' must be an array");
    std::set<std::pair<int, int>> seen;
    for (const auto& e : j.at("brackets")) {
      const int i = index_in_range(e, "i", m);
      const int jj = index_in_range(e, "j", m);
      if (i >= jj)
        throw input_error("bracket entries must have i < j (got i=" + std::to_string(i) +
                          ", j=" + std::to_string(jj) + "); the antisymmetric completion is automatic");
      if (!seen.insert({i, jj}).second)
        throw input_error("duplicate bracket entry for (i=" + std::to_string(i) +
                          ", j=" + std::to_string(jj) + ")");
      if (!e.contains("components") || !e.at("components").is_object())
        throw input_error("bracket entry needs a 'components' object");
      for (const auto& [k, v] : e.at("components").items()) {
        int kk = 0;
        try {
          kk = std::stoi(k);
        } catch (...) {
          throw input_error("bracket component key '" + k + "' is not an index");
        }
        if (kk < 1 || kk > m) throw input_error("bracket component key '" + k + "' out of range");
        const Rational val = scalar(v, "brackets");
        c(i - 1, jj - 1, kk - 1) = val;
        c(jj - 1, i - 1, kk - 1) = -val;
      }
    }
  }

  Metric metric = Metric::identity(m);
  if (j.contains("metric") && !(j.at("metric").is_string() && j.at("metric") == "identity")) {
    const auto& gj = j.at("metric");
    if (!gj.is_array() || static_cast<int>(gj.size()) != m)
      throw input_error("'metric' must be \"identity\" or an m x m matrix");
    Tensor g = Tensor::form2(m);
    for (int i = 0; i < m; ++i) {
      if (!gj[static_cast<std::size_t>(i)].is_array() ||
          static_cast<int>(gj[static_cast<std::size_t>(i)].size()) != m)
        throw input_error("'metric' must be an m x m matrix");
      for (int k = 0; k < m; ++k)
        g(i, k) = scalar(gj[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)], "metric");
    }
    metric = Metric::make(std::move(g));
  }

  FrameSpec frame(m, std::move(c), std::move(metric));

  if (j.contains("contact")) {
    const auto& cj = j.at("contact");
    if (!cj.is_object() || !cj.contains("xi") || !cj.contains("phi"))
      throw input_error("'contact' needs 'xi' and 'phi'");
    for (const auto& [key, _] : cj.items())
      if (key != "xi" && key != "phi") throw input_error("unknown contact key '" + key + "'");
    if (!cj.at("xi").is_array() || static_cast<int>(cj.at("xi").size()) != m)
      throw input_error("'xi' must be a vector of length m");
    Tensor xi = Tensor::vec(m);
    for (int i = 0; i < m; ++i) xi(i) = scalar(cj.at("xi")[static_cast<std::size_t>(i)], "xi");
    if (!cj.at("phi").is_array() || static_cast<int>(cj.at("phi").size()) != m)
      throw input_error("'phi' must be an m x m matrix (row i = components of phi(e_i))");
    Tensor phi = Tensor::endo(m);
    for (int i = 0; i < m; ++i) {
      const auto& row = cj.at("phi")[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<int>(row.size()) != m)
        throw input_error("'phi' must be an m x m matrix");
      for (int k = 0; k < m; ++k) phi(i, k) = scalar(row[static_cast<std::size_t>(k)], "phi");
    }
    attach_contact(frame, std::move(xi), std::move(phi));
  }

  if (j.contains("connection_override")) {
    const auto& oj = j.at("connection_override");
    if (!oj.is_array()) throw input_error("'connection_override' must be an array");
    Tensor ga(m, {Slot::Lower, Slot::Lower, Slot::Upper});
    std::set<std::pair<int, int>> seen;
    for (const auto& e : oj) {
      const int i = index_in_range(e, "i", m);
      const int jj = index_in_range(e, "j", m);
      if (!seen.insert({i, jj}).second)
        throw input_error("duplicate connection entry for (i=" + std::to_string(i) +
                          ", j=" + std::to_string(jj) + ")");
      if (!e.contains("components") || !e.at("components").is_object())
        throw input_error("connection entry needs a 'components' object");
      for (const auto& [k, v] : e.at("components").items()) {
        int kk = 0;
        try {
          kk = std::stoi(k);
        } catch (...) {
          throw input_error("connection component key '" + k + "' is not an index");
        }
        if (kk < 1 || kk > m)
          throw input_error("connection component key '" + k + "' out of range");
        ga(i - 1, jj - 1, kk - 1) = scalar(v, "connection_override");
      }
    }
    attach_override(frame, std::move(ga));
  }

  frame.params = params;
  return frame;
}

std::string render_manifold_file(const FrameSpec& frame) {
  const int m = frame.dim;
  ordered_json j;
  j["dimension"] = m;
  ordered_json brackets = ordered_json::array();
  for (int i = 0; i < m; ++i)
    for (int jj = i + 1; jj < m; ++jj) {
      ordered_json comps;
      for (int k = 0; k < m; ++k)
        if (!frame.brackets(i, jj, k).is_zero())
          comps[std::to_string(k + 1)] = frame.brackets(i, jj, k).str();
      if (!comps.empty())
        brackets.push_back(ordered_json{{"i", i + 1}, {"j", jj + 1}, {"components", comps}});
    }
  j["brackets"] = std::move(brackets);
  if (frame.metric.is_identity()) {
    j["metric"] = "identity";
  } else {
    ordered_json g = ordered_json::array();
    for (int i = 0; i < m; ++i) {
      ordered_json row = ordered_json::array();
      for (int k = 0; k < m; ++k) row.push_back(frame.metric(i, k).str());
      g.push_back(std::move(row));
    }
    j["metric"] = std::move(g);
  }
  if (frame.contact) {
    ordered_json xi = ordered_json::array();
    for (int i = 0; i < m; ++i) xi.push_back(frame.contact->xi(i).str());
    ordered_json phi = ordered_json::array();
    for (int i = 0; i < m; ++i) {
      ordered_json row = ordered_json::array();
      for (int k = 0; k < m; ++k) row.push_back(frame.contact->phi(i, k).str());
      phi.push_back(std::move(row));
    }
    j["contact"] = ordered_json{{"xi", std::move(xi)}, {"phi", std::move(phi)}};
  }
  if (frame.connection_override) {
    ordered_json ov = ordered_json::array();
    for (int i = 0; i < m; ++i)
      for (int jj = 0; jj < m; ++jj) {
        ordered_json comps;
        for (int k = 0; k < m; ++k)
          if (!(*frame.connection_override)(i, jj, k).is_zero())
            comps[std::to_string(k + 1)] = (*frame.connection_override)(i, jj, k).str();
        if (!comps.empty())
          ov.push_back(ordered_json{{"i", i + 1}, {"j", jj + 1}, {"components", comps}});
      }
    j["connection_override"] = std::move(ov);
  }
  return j.dump(2) + "\n";
}

}  // namespace curvwb
