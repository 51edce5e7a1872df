#pragma once

#include <map>
#include <string>

#include "curvwb/frame.hpp"

namespace curvwb {

/// Parses the JSON frame-specification format. `extra_params` (from the
/// command line) override parameters bound in the file. All scalar fields
/// are rational strings or parameter expressions of the form
/// [-] [RATIONAL *] NAME [/ POSITIVE-INT]; floats are rejected.
FrameSpec parse_manifold_file(const std::string& text,
                              const std::map<std::string, Rational>& extra_params = {});

/// Canonical serialization: sorted sparse entries, rationals in canonical
/// form, parameters already substituted (none are emitted).
std::string render_manifold_file(const FrameSpec& frame);

/// Scalar entry parser shared with the CLI: plain rational, or parameter
/// expression resolved against `params`.
Rational parse_scalar(const std::string& text, const std::map<std::string, Rational>& params);

}  // namespace curvwb
