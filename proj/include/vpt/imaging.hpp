#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "vpt/matrix.hpp"

namespace vpt {

/// Axis-aligned box in pixels, top-left origin.
struct RegionBox {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  friend bool operator==(const RegionBox&, const RegionBox&) = default;
};

/// H×W×3 image, RGB, interleaved row-major, intensities in [0, 1].
class Raster {
 public:
  static constexpr std::size_t kChannels = 3;

  Raster() = default;
  Raster(std::size_t height, std::size_t width, double fill = 0.0)
      : height_(height), width_(width), values_(height * width * kChannels, fill) {}
  Raster(std::size_t height, std::size_t width, std::vector<double> values);

  std::size_t height() const { return height_; }
  std::size_t width() const { return width_; }
  bool empty() const { return values_.empty(); }

  double& at(std::size_t y, std::size_t x, std::size_t c) { return values_[(y * width_ + x) * kChannels + c]; }
  double at(std::size_t y, std::size_t x, std::size_t c) const {
    return values_[(y * width_ + x) * kChannels + c];
  }

  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

  friend bool operator==(const Raster&, const Raster&) = default;

 private:
  std::size_t height_ = 0;
  std::size_t width_ = 0;
  std::vector<double> values_;
};

using Rgb = std::array<double, 3>;

enum class ComboAxis { kVertical, kHorizontal };

/// Region and context squares stacked into one raster. The region occupies
/// the top half (vertical) or the left half (horizontal).
struct ComboImage {
  Raster raster;
  ComboAxis axis = ComboAxis::kVertical;
  std::size_t side = 0;  // side of each constituent square
};

struct CptOverlay {
  Rgb color{1.0, 0.75, 0.80};
  double alpha = 0.4;
};

/// Resizes with area averaging along axes that shrink and bilinear
/// (half-pixel centres) along axes that grow. Same-size axes are copied.
Raster resize(const Raster& image, std::size_t height, std::size_t width);

/// Intersects the box with the image. Logs a warning if anything was cut
/// off; throws if nothing is left.
RegionBox clamp_box(const RegionBox& box, std::size_t height, std::size_t width, std::string_view sample_id = {});

Raster crop(const Raster& image, const RegionBox& box);

/// Crops the (clamped) box and squashes it into a side×side square.
Raster crop_region(const Raster& image, const RegionBox& box, std::size_t side, std::string_view sample_id = {});

ComboImage make_combo(const Raster& region, const Raster& context, ComboAxis axis = ComboAxis::kVertical);

/// Returns the region (first == true) or context half of a combo.
Raster combo_half(const ComboImage& combo, bool region);

Raster apply_cpt_overlay(const Raster& image, const RegionBox& box, const CptOverlay& overlay = {});

std::pair<Raster, Raster> split_left_right(const Raster& image);

Raster hconcat(const Raster& left, const Raster& right);
Raster vconcat(const Raster& top, const Raster& bottom);

}  // namespace vpt
