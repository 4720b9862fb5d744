#pragma once

#include "conerig/document.hpp"

namespace conerig {

/// SVG 1.1 rendering of a 2-D framework: joints as circles, bars solid,
/// cables dashed, struts double-lined, mirror lines of reflection elements
/// dotted. Byte-deterministic for a fixed document.
std::string render_svg(const FrameworkDocument& doc);

void write_svg(const FrameworkDocument& doc, const std::string& path);

}  // namespace conerig
