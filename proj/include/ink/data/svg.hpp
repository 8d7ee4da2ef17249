// Copyright 2026 The ink authors. Apache 2.0 License.

#pragma once

#include <string>

#include "ink/data/ink.hpp"

namespace ink {

/// SVG 1.1 document with one polyline per pen-down run. A pen = 1 point
/// closes the run it belongs to. The viewBox covers the points plus a 5%
/// margin. Output text is deterministic.
std::string render_svg(const InkSample& sample);

}  // namespace ink
