// --------------------------------------------------------------------
// Lossless grayscale image files: 8-bit PNG (via zlib) and PGM.
// --------------------------------------------------------------------
#pragma once

#include <filesystem>
#include <stdexcept>

#include "geoclidean/render.hpp"

namespace geoclidean {

struct ImageIoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_png(const std::filesystem::path& path, const RasterImage& img);
RasterImage read_png(const std::filesystem::path& path);

void write_pgm(const std::filesystem::path& path, const RasterImage& img);

}  // namespace geoclidean
