#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "vpt/imaging.hpp"
#include "vpt/matrix.hpp"

namespace vpt {

/// Patch layout of an image: rows = H / P, cols = W / P, L = rows · cols.
struct PatchGrid {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t patch = 0;

  std::size_t length() const { return rows * cols; }
  friend bool operator==(const PatchGrid&, const PatchGrid&) = default;
};

/// Throws unless both dimensions are positive multiples of the patch size.
PatchGrid make_patch_grid(std::size_t height, std::size_t width, std::size_t patch);

/// Learned positions: one vector for the CLS slot plus one per grid cell
/// (row-major). The CLS vector is never interpolated.
struct PositionalEncoding {
  PatchGrid grid;
  Matrix cls_vector;    // 1×d
  Matrix grid_vectors;  // L×d
};

enum class Segment { kCls, kRegion, kContext };

struct TokenSequence {
  Matrix tokens;  // rows are tokens
  std::vector<Segment> labels;

  std::size_t count(Segment s) const;
};

/// Flattens each P×P patch, row-major over the grid, into a 3·P² row.
/// Within a row the order is channel, then patch row, then patch column,
/// matching a [width, 3, P, P] convolution kernel.
Matrix extract_patches(const Raster& image, std::size_t patch);

/// Patch embedding: extract_patches(image) · projection, where projection
/// is (3·P²)×d. Every token gets `label`.
TokenSequence patchify(const Raster& image, std::size_t patch, const Matrix& projection,
                       Segment label = Segment::kContext);

/// Align-corners bilinear resampling of grid_vectors onto `target`.
PositionalEncoding inflate_pe(const PositionalEncoding& pe, const PatchGrid& target);

/// [cls?; region + PE₁.grid; context + PE₂.grid]. When given, the CLS row is
/// cls_embedding + PE₁.cls_vector.
TokenSequence assemble_rgp(const TokenSequence& region, const TokenSequence& context, const PositionalEncoding& pe1,
                           const PositionalEncoding& pe2, const std::optional<Matrix>& cls_embedding = std::nullopt);

/// patchify(combo) + PE_inter with region/context labels taken from the
/// combo layout. When given, the CLS row is cls_embedding + PE_inter.cls_vector.
TokenSequence assemble_rgps(const ComboImage& combo, const Matrix& projection, const PositionalEncoding& pe_inter,
                            const std::optional<Matrix>& cls_embedding = std::nullopt);

/// Grid of a combo built from squares whose own grid is side/P square.
PatchGrid combo_grid(std::size_t side, std::size_t patch, ComboAxis axis);

/// Region/context label of every grid cell of a combo, row-major.
std::vector<Segment> combo_labels(const PatchGrid& grid, ComboAxis axis);

/// Splits a combo-sized encoding into the parts covering the region and the
/// context square (both square grids). Each half keeps the CLS vector.
std::pair<PositionalEncoding, PositionalEncoding> split_pe(const PositionalEncoding& pe_inter, ComboAxis axis);

}  // namespace vpt
