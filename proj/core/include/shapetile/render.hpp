#pragma once

#include "shapetile/certify.hpp"

#include <string>

namespace shapetile {

struct RenderOptions {
    double unit_px = 40.0;  // pixels per unit length
};

/// Two-panel SVG: placements with positive weight on the left, negative on
/// the right, each panel labelled with the summed weight of its regions and
/// the target square dashed.  Output depends only on the certificate and
/// options.
std::string render_certificate_svg(const Certificate& c, const RenderOptions& opt = {});

}  // namespace shapetile
