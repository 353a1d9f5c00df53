#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "vpt/data.hpp"
#include "vpt/encoders.hpp"
#include "vpt/evaluation.hpp"
#include "vpt/losses.hpp"

namespace vpt {

/// Named architecture presets: "tiny" (desk scale), "vit-b-16", "vit-l-14-336".
/// Returns the backbone and its default global batch size.
std::pair<BackboneConfig, std::size_t> backbone_preset(std::string_view name);

struct OptimConfig {
  double base_lr = 1e-4;
  std::size_t warmup_steps = 0;
  double weight_decay = 0.2;
  double beta1 = 0.9;
  double beta2 = 0.98;
  double eps = 1e-6;
};

/// Epoch ordering. shuffle: plain permutation per epoch. balanced: the
/// permutation is dealt round-robin over inference texts so each batch holds
/// every text in near-equal proportion. fixed: one balanced partition for the
/// whole run, with only the batch order reshuffled per epoch.
enum class Sampler { kShuffle, kBalanced, kFixed };
Sampler parse_sampler(std::string_view name);
std::string_view sampler_name(Sampler s);

struct DataConfig {
  std::string source = "synthetic";  // "synthetic" or "sherlock"
  // synthetic
  std::uint64_t synth_seed = 0;
  std::size_t synth_train = 256;
  std::size_t synth_val = 256;
  std::size_t synth_test = 0;
  std::size_t image_side = 64;
  std::size_t concepts = 8;
  // sherlock-format JSONL
  std::string train_path;
  std::string val_path;
  std::string test_path;
  std::string image_root;
  std::string val_auto_candidates;
  std::string test_auto_candidates;
};

struct RunConfig {
  std::string backbone_name = "tiny";
  BackboneConfig backbone;
  EncoderOptions encoder;
  LossConfig loss;
  std::size_t epochs = 10;
  std::size_t batch_size = 64;
  std::string schedule = "cosine";
  OptimConfig optim;
  Sampler sampler = Sampler::kShuffle;
  std::uint64_t seed = 0;
  bool gradient_checkpointing = false;
  int threads = 0;  // 0 → OpenMP default
  std::string pretrained;
  bool inflate_pe = false;
  DataConfig data;
  EvalOptions eval;
  bool eval_every_epoch = false;
  std::filesystem::path run_dir = "runs/default";

  void validate() const;
  std::string to_yaml() const;
  /// FNV-1a over the canonical YAML minus run_dir, as 16 hex digits.
  std::string hash() const;
};

RunConfig parse_run_config(std::string_view yaml_text);
RunConfig load_run_config(const std::filesystem::path& path);

/// Applies dotted-key overrides ("loss.variant" = "mtl") to a YAML document
/// and returns the re-emitted text. Values are parsed as YAML scalars.
std::string apply_overrides(std::string_view yaml_text, const std::map<std::string, std::string>& overrides);

/// Learning rate at step t (0-based) of total_steps: optional linear warmup,
/// then 0.5·base·(1 + cos(π·t'/T')) where t' counts post-warmup steps and T'
/// is the index of the last step, so the final step reaches exactly 0.
double cosine_lr(double base_lr, std::size_t step, std::size_t total_steps, std::size_t warmup_steps = 0);

/// Decoupled weight-decay Adam over a parameter set.
class AdamW {
 public:
  AdamW(const ad::ParameterSet& params, const OptimConfig& cfg);
  void step(ad::ParameterSet& params, const ad::Gradients& grads, double lr);
  std::size_t steps() const { return t_; }
  /// Weight decay applies to matrices only; gains, biases, single-row
  /// embeddings and the logit scale are exempt.
  static bool decays(const ad::Parameter& p);

  std::vector<Matrix>& first_moments() { return m_; }
  std::vector<Matrix>& second_moments() { return v_; }
  const std::vector<Matrix>& first_moments() const { return m_; }
  const std::vector<Matrix>& second_moments() const { return v_; }
  void set_steps(std::size_t t) { t_ = t; }

 private:
  OptimConfig cfg_;
  std::vector<Matrix> m_, v_;
  std::size_t t_ = 0;
};

struct StepRecord {
  std::size_t step = 0;
  std::size_t epoch = 0;
  double lr = 0.0;
  double loss = 0.0;
  double logit_scale = 0.0;
};

struct EpochRecord {
  std::size_t epoch = 0;
  double mean_loss = 0.0;
  std::optional<double> val_p_at_1;
};

struct Checkpoint {
  RunConfig config;
  ad::ParameterSet params;
  std::vector<Matrix> adam_m, adam_v;
  std::size_t step = 0;
  std::size_t epoch = 0;  // completed epochs
  std::vector<EpochRecord> history;
  std::string id;  // "<config hash>-e<epoch>"

  /// Bundle built from the config with the stored parameter values.
  EncoderBundle bundle() const;
};

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt);
Checkpoint load_checkpoint(const std::filesystem::path& path);

struct Datasets {
  DatasetSplit train;
  DatasetSplit val;
  std::optional<DatasetSplit> test;
};

/// Materializes the configured corpus (synthetic or JSONL).
Datasets load_datasets(const RunConfig& cfg);

struct TrainOptions {
  bool write_outputs = true;  // run dir, step log, checkpoints
  const Checkpoint* resume = nullptr;
  /// Called after every epoch with the in-memory state.
  std::function<void(const EpochRecord&)> on_epoch;
};

struct TrainResult {
  Checkpoint checkpoint;
  std::vector<StepRecord> steps;
};

/// Runs epochs × ceil(n / batch_size) optimizer steps of the configured loss.
/// Throws on a non-finite loss, naming the batch's sample ids.
TrainResult train(const RunConfig& cfg, const Datasets& data, const TrainOptions& options = {});

/// Loss value and parameter gradients of one batch; exposed for checks.
struct BatchGradient {
  double loss = 0.0;
  ad::Gradients grads;
};
BatchGradient batch_gradient(const EncoderBundle& bundle, const LossConfig& loss, const DatasetSplit& split,
                             const std::vector<std::size_t>& batch, std::uint64_t rng_seed,
                             bool gradient_checkpointing = false);

/// Evaluates a bundle on a split and stamps the report with run metadata.
EvalReport evaluate_checkpoint(const Checkpoint& ckpt, const DatasetSplit& split);

struct AblationRun {
  std::string name;
  std::map<std::string, std::string> overrides;
};

struct AblationGrid {
  std::string base_yaml;
  std::filesystem::path run_dir = "runs/ablation";
  std::string split = "val";
  std::vector<AblationRun> runs;
};

AblationGrid load_ablation_grid(const std::filesystem::path& path);

struct AblationOutcome {
  AblationRun run;
  std::optional<EvalReport> report;
  std::string error;
};

/// Trains and evaluates each grid entry; failures are recorded and the
/// sweep continues. Writes ablation.json and ablation.txt to the run dir.
std::vector<AblationOutcome> ablate(const AblationGrid& grid, bool write_outputs = true);

std::string ablation_table(const std::vector<AblationOutcome>& outcomes);

}  // namespace vpt
