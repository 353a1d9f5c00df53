#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vpt/data.hpp"
#include "vpt/encoders.hpp"
#include "vpt/matrix.hpp"

namespace vpt {

/// K×K cosine similarities; row = observation, column = inference. Inputs
/// are unit-norm rows, so this is vis · txtᵀ.
Matrix similarity_matrix(const Matrix& vis, const Matrix& txt);

struct RetrievalMetrics {
  double mean_rank_im2txt = 0.0;
  double mean_rank_txt2im = 0.0;
  double p_at_1_im2txt = 0.0;
  std::vector<std::size_t> ranks_im2txt;
  std::vector<std::size_t> ranks_txt2im;
};

/// 1-based ranks of the diagonal: rank = 1 + number of strictly greater
/// entries in the row (im→txt) or column (txt→im). Ties never penalize.
RetrievalMetrics retrieval_metrics(const Matrix& similarity);

namespace ref {
Matrix similarity_matrix(const Matrix& vis, const Matrix& txt);
RetrievalMetrics retrieval_metrics(const Matrix& similarity);
}  // namespace ref

double iou(const RegionBox& a, const RegionBox& b);

struct LocalizationCase {
  std::size_t observation = 0;  // index into the split
  std::string inference;
  std::vector<RegionBox> candidates;
  RegionBox target;
};

enum class LocalizationMode { kGroundTruth, kAuto };

inline constexpr double kAutoBoxIouThreshold = 0.5;

/// Scores one candidate region of a case against the case's inference.
using RegionScorer = std::function<double(const LocalizationCase&, const RegionBox&)>;

/// Fraction of cases whose best-scoring candidate (first on ties) is the
/// target (GT mode) or overlaps it with IoU >= 0.5 (auto mode).
double localization_accuracy(const std::vector<LocalizationCase>& cases, const RegionScorer& scorer,
                             LocalizationMode mode);

/// Cases built from a split's candidate tables; observations whose image has
/// no candidates are skipped. GT mode requires the target among candidates.
std::vector<LocalizationCase> localization_cases(const DatasetSplit& split, LocalizationMode mode);

struct GapLosses {
  double vis_clue = 0.0;
  double vis_inf = 0.0;
  double inf_clue = 0.0;
};

inline constexpr std::size_t kGapBatchSize = 64;

/// Contrastive loss of each modality pair over consecutive fixed-size
/// batches in dataset order, averaged over batches. A trailing partial batch
/// is dropped when at least one full batch exists.
GapLosses modality_gap(const Matrix& vis, const Matrix& clue, const Matrix& inf, double logit_scale,
                       std::size_t batch_size = kGapBatchSize);

struct SplitEmbeddings {
  Matrix vis;
  Matrix clue;
  Matrix inf;
};

/// Embeds every observation (parallel over samples). Clue embeddings are
/// only computed when with_clue is set.
SplitEmbeddings embed_split(const EncoderBundle& bundle, const DatasetSplit& split, std::size_t limit = 0,
                            bool with_clue = true);

GapLosses modality_gap_report(const DatasetSplit& split, const EncoderBundle& bundle,
                              std::size_t batch_size = kGapBatchSize);

struct EvalReport {
  double mean_rank_im2txt = 0.0;
  double mean_rank_txt2im = 0.0;
  double p_at_1_im2txt = 0.0;
  double loc_acc_gt = 0.0;    // NaN when the split has no GT candidates
  double loc_acc_auto = 0.0;  // NaN when the split has no detector candidates
  GapLosses gap_losses;
  std::size_t k = 0;
  std::string split;
  std::string config_hash;
  std::uint64_t seed = 0;
  std::string checkpoint_id;

  nlohmann::json to_json() const;
  static EvalReport from_json(const nlohmann::json& j);
  /// Fixed-width table: retrieval columns, then GT/Auto localization.
  std::string table(const std::string& row_label) const;
};

struct EvalOptions {
  std::size_t k = 0;  // 0 → whole split
  bool localization = true;
  bool gap = true;
  std::size_t gap_batch = kGapBatchSize;
};

EvalReport evaluate(const EncoderBundle& bundle, const DatasetSplit& split, const EvalOptions& options = {});

/// Retrieval P@1 of the planted-rule scorer on a synthetic split.
double synth_rule_p_at_1(const DatasetSplit& split, std::size_t concepts, std::size_t region_side);

}  // namespace vpt
