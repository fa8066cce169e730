#pragma once

#include <string>

#include "opaque/coverage.hpp"

namespace opaque {

/// Standalone SVG picture of a coverage result: filled regions, the barrier
/// segments on top, and isolated points as dots. This is the only lossy
/// output; coordinates are rounded to doubles for display.
std::string render_svg(const CoverageResult& result);

}  // namespace opaque
