// --------------------------------------------------------------------
// Scene rendering: SVG text and grayscale rasters, black strokes on a
// white background.
// --------------------------------------------------------------------
#pragma once

#include <string>
#include <vector>

#include "geoclidean/realize.hpp"

namespace geoclidean {

struct RenderConfig {
    int pixels = 256;           // square output
    double stroke_width = 2.5;  // in output pixels
    bool antialias = true;      // 4x4 supersampling
};

// Grayscale intensities in [0,1], row-major, origin top-left.
struct RasterImage {
    int width = 0;
    int height = 0;
    std::vector<double> values;

    double at(int row, int col) const { return values[static_cast<std::size_t>(row) * width + col]; }
    double& at(int row, int col) { return values[static_cast<std::size_t>(row) * width + col]; }
};

std::string render_vector(const Scene& scene, const RenderConfig& config);

RasterImage rasterize(const Scene& scene, const RenderConfig& config);

}  // namespace geoclidean
