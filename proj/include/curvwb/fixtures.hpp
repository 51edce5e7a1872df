#pragma once

#include <map>
#include <string>
#include <vector>

#include "curvwb/frame.hpp"

namespace curvwb {

/// Published reference values bundled with an example fixture: the h table
/// and curvature components as printed in the source the fixture reproduces.
/// The tool never trusts these; it derives its own values and reports
/// mismatches as diagnostics.
struct ReferenceTables {
  std::optional<Tensor> h;  // (1,1)
  // expected R(e_i,e_j)e_k, 1-based (i,j,k)
  std::vector<std::pair<std::array<int, 3>, Tensor>> curvature;
};

struct FixtureInfo {
  std::string name;
  std::vector<std::string> required_params;
  std::string summary;
};

const std::vector<FixtureInfo>& fixture_infos();

/// Built-in frame generators. Throws input_error for unknown names or
/// missing/invalid parameters.
FrameSpec builtin_fixture(const std::string& name, const std::map<std::string, Rational>& params);

/// Reference tables for the fixtures that carry them (the two bundled
/// examples); empty optional otherwise.
std::optional<ReferenceTables> fixture_reference_tables(
    const std::string& name, const std::map<std::string, Rational>& params);

}  // namespace curvwb
