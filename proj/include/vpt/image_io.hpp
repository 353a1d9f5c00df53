#pragma once

#include <filesystem>

#include "vpt/imaging.hpp"

namespace vpt {

/// Decodes PNG/JPEG (anything OpenCV's imgcodecs reads) into an RGB raster.
Raster load_image(const std::filesystem::path& path);

/// Writes an 8-bit RGB PNG.
void save_png(const Raster& image, const std::filesystem::path& path);

}  // namespace vpt
