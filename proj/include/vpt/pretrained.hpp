#pragma once

#include <filesystem>

#include "vpt/archive.hpp"
#include "vpt/encoders.hpp"

namespace vpt {

// Pretrained two-tower weights in the common checkpoint layout:
//
//   visual.conv1.weight                      [w, 3, P, P]  → (3P²)×w, rows ordered (c, py, px)
//   visual.class_embedding                   [w]
//   visual.positional_embedding              [1 + g², w]   → class_position + g×g grid
//   visual.ln_pre / ln_post .weight/.bias    [w]
//   visual.transformer.resblocks.i.*         attention and MLP blocks
//   visual.proj                              [w, d]
//   token_embedding.weight                   [V, w]
//   positional_embedding                     [ctx, w]
//   transformer.resblocks.i.*                text blocks
//   ln_final.weight/.bias                    [w]
//   text_projection                          [w, d]
//   logit_scale                              []
//
// Block weights named *.in_proj_weight, *.out_proj.weight, *.c_fc.weight and
// *.c_proj.weight are stored output-major and are transposed on load.

/// Copies archive weights into the bundle. The archive's positional grid
/// must match the backbone resolution unless inflate_pe is set, in which
/// case it is resampled. Mode grids (combo, region, context) are always
/// derived from the loaded encoding. In separate text mode the clue tower
/// receives a copy of the loaded text tower.
void load_pretrained(EncoderBundle& bundle, const Archive& archive, bool inflate_pe);
void load_pretrained(EncoderBundle& bundle, const std::filesystem::path& path, bool inflate_pe);

/// Writes the bundle in the pretrained layout, using the named grid
/// parameter as the single-image positional grid.
Archive export_pretrained(const EncoderBundle& bundle, std::string_view pe_grid_param);

}  // namespace vpt
