#pragma once

#include "curvwb/fixtures.hpp"
#include "curvwb/kernels.hpp"
#include "curvwb/report.hpp"

namespace curvwb {

/// Runs the full pipeline on one frame: connection, curvature stack,
/// contact checks, nullity fit, identity suite, curvature conditions,
/// pseudosymmetry, and reference-table audit. Never asserts global
/// isometries; branch lines are annotations on the frame computation.
ClassificationReport classify(const FrameSpec& frame, const std::string& input_id,
                              const ReferenceTables* refs = nullptr,
                              ExecMode mode = ExecMode::Parallel);

}  // namespace curvwb
