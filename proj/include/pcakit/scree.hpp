#pragma once

#include <span>
#include <string>

#include "pcakit/extraction.hpp"

namespace pcakit {

/// "component,eigenvalue" then one line per point.
std::string scree_csv(std::span<const ScreePoint> points);

/// Standalone SVG line chart: axes, one marker per point and a dashed
/// reference line at eigenvalue 1.
std::string scree_svg(std::span<const ScreePoint> points);

}  // namespace pcakit
