#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "vpt/autodiff.hpp"
#include "vpt/imaging.hpp"
#include "vpt/tokens.hpp"

namespace vpt {

/// Architecture of both towers. Defaults are the desk-scale tiny backbone.
struct BackboneConfig {
  std::size_t layers = 2;
  std::size_t width = 32;
  std::size_t heads = 4;
  std::size_t patch = 4;
  std::size_t resolution = 16;  // side of the pretrained single-image PE grid
  std::size_t embed_dim = 32;
  std::size_t text_layers = 2;
  std::size_t text_width = 32;
  std::size_t text_heads = 4;
  std::size_t vocab = 64;
  std::size_t context_length = 16;

  void validate() const;
  friend bool operator==(const BackboneConfig&, const BackboneConfig&) = default;
};

/// How the observation (image + region) becomes visual tokens.
///   cpt          overlay, split left/right, encode each, average
///   cpt-x2       overlay, left/right halves as two token streams (PE₁/PE₂)
///   rgp          region crop + full image as two token streams (PE₁/PE₂)
///   rgp-s        combo image with one inflated PE_inter
///   region-only  region crop alone with PE₁
///   context-only full image alone with PE₂
///   plain-sum    region and full image encoded separately, features summed
enum class VisualMode { kCpt, kCptX2, kRgp, kRgps, kRegionOnly, kContextOnly, kPlainSum };
enum class TextMode { kShared, kSeparate };
enum class TextRole { kClue, kInference };

VisualMode parse_visual_mode(std::string_view name);
std::string_view visual_mode_name(VisualMode m);
TextMode parse_text_mode(std::string_view name);
std::string_view text_mode_name(TextMode m);
ComboAxis parse_combo_axis(std::string_view name);
std::string_view combo_axis_name(ComboAxis a);

struct EncoderOptions {
  VisualMode visual_mode = VisualMode::kRgps;
  TextMode text_mode = TextMode::kShared;
  std::size_t resolution_region = 16;
  std::size_t resolution_context = 16;
  ComboAxis combo_axis = ComboAxis::kVertical;
  CptOverlay overlay;
  /// CPT only: normalize each half before averaging instead of after.
  bool cpt_normalize_before_mean = false;
  /// Round matmul outputs to float32 in the forward pass.
  bool mixed_precision = false;

  void validate(const BackboneConfig& backbone) const;
};

/// Both towers plus the logit scale, as one named parameter set.
///
/// Parameter names follow the usual two-tower checkpoint layout
/// ("visual.transformer.resblocks.0.attn.in_proj_weight", "token_embedding.weight",
/// "logit_scale", ...) with weights stored input-major (y = x · W). Positional
/// grids are mode specific: visual.pe_grid (cpt), visual.pe_region and
/// visual.pe_context (cpt-x2, rgp, region-only, context-only, plain-sum),
/// visual.pe_inter (rgp-s); the CLS slot uses visual.class_position. In
/// separate text mode the clue tower lives under the "clue." prefix and the
/// inference tower under the plain names.
class EncoderBundle {
 public:
  EncoderBundle(const BackboneConfig& backbone, const EncoderOptions& options, std::uint64_t seed);

  const BackboneConfig& backbone() const { return backbone_; }
  const EncoderOptions& options() const { return options_; }
  ad::ParameterSet& params() { return params_; }
  const ad::ParameterSet& params() const { return params_; }

  double logit_scale() const;
  double log_logit_scale() const { return params_.value("logit_scale")[0]; }

  // Differentiable forwards; each returns a 1×embed_dim unit-norm row.
  ad::Var visual(ad::Tape& tape, const Raster& image, const RegionBox& box, std::string_view sample_id = {}) const;
  ad::Var text(ad::Tape& tape, std::string_view text, TextRole role) const;

  ad::Var visual_cpt(ad::Tape& tape, const Raster& image, const RegionBox& box, std::string_view sample_id = {}) const;
  ad::Var visual_cpt_x2(ad::Tape& tape, const Raster& image, const RegionBox& box,
                        std::string_view sample_id = {}) const;
  ad::Var visual_rgp(ad::Tape& tape, const Raster& region_img, const Raster& context_img) const;
  ad::Var visual_rgps(ad::Tape& tape, const Raster& region_img, const Raster& context_img, ComboAxis axis) const;
  ad::Var visual_single(ad::Tape& tape, const Raster& image, std::string_view pe_name) const;
  ad::Var visual_plain_sum(ad::Tape& tape, const Raster& region_img, const Raster& context_img) const;

  // Pre-trunk token matrices (CLS first), exposed for pipeline checks.
  ad::Var rgp_tokens(ad::Tape& tape, const Raster& region_img, const Raster& context_img,
                     std::string_view pe1 = "visual.pe_region", std::string_view pe2 = "visual.pe_context") const;
  ad::Var rgps_tokens(ad::Tape& tape, const ComboImage& combo) const;

  /// Pre-trunk tokens → unnormalized pooled feature (CLS through ln_post and proj).
  ad::Var visual_trunk(ad::Tape& tape, ad::Var tokens) const;

  // Value-level wrappers.
  Matrix encode_visual(const Raster& image, const RegionBox& box, std::string_view sample_id = {}) const;
  Matrix encode_text(std::string_view text, TextRole role) const;

  /// Region and context inputs for the region-based modes.
  Raster region_input(const Raster& image, const RegionBox& box, std::string_view sample_id = {}) const;
  Raster context_input(const Raster& image) const;

  /// Positional encoding view of a grid parameter (CLS vector attached).
  PositionalEncoding positional(std::string_view grid_param) const;
  const std::map<std::string, PatchGrid, std::less<>>& pe_grids() const { return pe_grids_; }

  /// Rebuilds mode-specific grids from a single-image encoding (copy when the
  /// grid matches, inflate otherwise).
  void set_pretrained_pe(const PositionalEncoding& base);

  std::string text_prefix(TextRole role) const;

 private:
  ad::Var block(ad::Tape& tape, ad::Var x, const std::string& prefix, std::size_t heads, bool causal) const;
  ad::Var patch_tokens(ad::Tape& tape, const Raster& image, std::string_view pe_name) const;
  ad::Var cls_token(ad::Tape& tape) const;
  ad::Var maybe_round(ad::Var x) const;
  void add_block_params(const std::string& prefix, std::size_t width, std::size_t layers_total, std::uint64_t& stream);
  void add_text_tower(const std::string& prefix, std::uint64_t& stream);

  BackboneConfig backbone_;
  EncoderOptions options_;
  ad::ParameterSet params_;
  std::map<std::string, PatchGrid, std::less<>> pe_grids_;
  std::uint64_t seed_;
};

}  // namespace vpt
