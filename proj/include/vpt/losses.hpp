#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "vpt/matrix.hpp"

namespace vpt {

inline constexpr double kMaxLogitScale = 100.0;

/// Log of the initial logit scale, ln(1 / 0.07).
double initial_log_logit_scale();

/// exp(log_scale) clamped to kMaxLogitScale.
double effective_logit_scale(double log_scale);

/// Value and gradients of the symmetric contrastive loss between two
/// row-aligned embedding sets.
struct ContrastiveResult {
  double loss = 0.0;
  Matrix d_a;
  Matrix d_b;
  double d_scale = 0.0;  // d loss / d (clamped) logit scale
};

/// Symmetric InfoNCE: mean of the a→b and b→a cross-entropies over the
/// logits scale · a·bᵀ with targets on the diagonal. Rows must be unit norm
/// and finite; the scale is clamped to kMaxLogitScale.
ContrastiveResult contrastive_with_grad(const Matrix& a, const Matrix& b, double logit_scale);
double contrastive(const Matrix& a, const Matrix& b, double logit_scale);

enum class LossVariant { kSingle, kMtl, kDual, kDualStar, kTriple, kWeightedDual };

LossVariant parse_loss_variant(std::string_view name);
std::string_view loss_variant_name(LossVariant v);

struct LossConfig {
  LossVariant variant = LossVariant::kDual;
  double threshold = 0.0;  // T̄ for kSingle; kMtl always uses 0.5
  double alpha = 0.5;      // weight of the vision-clue term in kWeightedDual
  double beta = 0.5;       // weight of the vision-inference term in kWeightedDual

  /// Throws on out-of-range values or alpha + beta != 1 for weighted-dual.
  void validate() const;
  double effective_threshold() const { return variant == LossVariant::kMtl ? 0.5 : threshold; }
  /// True when the variant needs clue and inference texts from separate towers.
  bool separate_text_towers() const { return variant == LossVariant::kDualStar; }
};

/// Per-sample text choice for the single loss: draws p uniform on (0, 1]
/// and picks the clue when p <= threshold, the inference otherwise.
/// Entry i is true when sample i uses its clue.
std::vector<bool> draw_clue_choice(std::size_t n, double threshold, std::mt19937_64& rng);

struct LossResult {
  double loss = 0.0;
  Matrix d_vis;
  Matrix d_clue;
  Matrix d_inf;
  double d_scale = 0.0;
};

/// Evaluates any variant with gradients w.r.t. all three embedding sets.
/// rng is consumed only by the single/MTL variants.
LossResult loss_with_grad(const LossConfig& cfg, const Matrix& vis, const Matrix& clue, const Matrix& inf,
                          double logit_scale, std::mt19937_64& rng);

double single_loss(const Matrix& vis, const Matrix& clue, const Matrix& inf, double threshold, double logit_scale,
                   std::mt19937_64& rng);
double dual_loss(const Matrix& vis, const Matrix& clue, const Matrix& inf, double logit_scale);
double triple_loss(const Matrix& vis, const Matrix& clue, const Matrix& inf, double logit_scale);
double weighted_dual_loss(const Matrix& vis, const Matrix& clue, const Matrix& inf, double alpha, double beta,
                          double logit_scale);

}  // namespace vpt
