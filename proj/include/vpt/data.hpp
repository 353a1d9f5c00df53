#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vpt/imaging.hpp"

namespace vpt {

inline constexpr int kSchemaVersion = 1;

/// One sample: an image region with its clue and inference sentences.
/// The clue is a training-time signal only; evaluation scoring never reads it.
struct Observation {
  std::string sample_id;
  std::string image_path;  // relative to the split's image root
  RegionBox box;
  std::string clue;
  std::string inference;

  friend bool operator==(const Observation&, const Observation&) = default;
};

struct DatasetSplit {
  std::string name = "train";
  std::vector<Observation> observations;
  /// Annotated candidate regions per image path (GT-box localization).
  std::map<std::string, std::vector<RegionBox>> gt_candidates;
  /// Detector candidate regions per image path (auto-box localization).
  std::map<std::string, std::vector<RegionBox>> auto_candidates;
  std::filesystem::path image_root;
  /// Decoded images held in memory (synthetic corpora); keyed by image_path.
  std::map<std::string, Raster, std::less<>> inline_images;

  /// Inline image if present, else decoded from image_root / image_path.
  Raster image(const Observation& obs) const;
  std::size_t size() const { return observations.size(); }
};

struct LoadDiagnostic {
  std::size_t line = 0;  // 1-based
  std::string message;
};

struct LoadResult {
  DatasetSplit split;
  std::vector<LoadDiagnostic> diagnostics;
};

/// Reads one JSON object per line:
///   {"schema_version": 1, "id": str, "image": str, "bbox": [x, y, w, h],
///    "clue": str, "inference": str, "candidates": [[x, y, w, h], ...]?}
/// Bad records are skipped and reported with their line numbers. Images are
/// checked for readability unless check_images is false.
LoadResult load_sherlock(const std::filesystem::path& path, std::string_view split_name,
                         const std::filesystem::path& image_root, bool check_images = true);

/// Detector sidecar, one object per line:
///   {"schema_version": 1, "image": str, "boxes": [[x, y, w, h], ...]}
std::vector<LoadDiagnostic> load_auto_candidates(DatasetSplit& split, const std::filesystem::path& path);

/// One annotation line (no trailing newline) in the load_sherlock schema.
std::string serialize_observation(const Observation& obs, const std::vector<RegionBox>* candidates = nullptr);

/// Writes the split's annotations (and candidates) as JSONL.
void write_sherlock(const DatasetSplit& split, const std::filesystem::path& path);
void write_auto_candidates(const DatasetSplit& split, const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Synthetic corpus
//
// Each sample draws a concept k (stratified: every concept appears
// floor(n / concepts) or one more times). The region square carries k in
// three planted channels at three spatial scales:
//   bit 0  red level 0.8 / 0.2             (survives any downsampling)
//   bit 1  green stripes, period side / 4  (survives 2x, lost at 4x)
//   bit 2  blue 1-pixel checkerboard       (lost at 2x)
// Cleared bits use a flat 0.5. Everything outside the region is uniform
// noise. The clue is "object_k"; the inference is "scene_f(k)" with the
// surjective map f(k) = k mod (concepts - 1), so the wrap-around concept
// shares its scene with concept 0.

struct SynthConfig {
  std::uint64_t seed = 0;
  std::size_t n = 256;
  std::size_t image_side = 64;
  std::size_t concepts = 8;
  std::size_t region_side = 0;  // 0 → image_side / 4
  std::string split_name = "train";
  std::size_t distractors = 2;  // extra candidate boxes per image

  std::size_t effective_region_side() const { return region_side ? region_side : image_side / 4; }
};

DatasetSplit synth_corpus(const SynthConfig& cfg);
DatasetSplit synth_corpus(std::uint64_t seed, std::size_t n, std::size_t image_side);

std::size_t synth_scene_count(std::size_t concepts);
std::size_t synth_scene_of(std::size_t concept_id, std::size_t concepts);
std::string synth_clue(std::size_t concept_id);
std::string synth_inference(std::size_t concept_id, std::size_t concepts);

/// Reads the planted encoding back from a native-resolution region crop.
std::size_t decode_synth_concept(const Raster& region_crop);

/// Rule-based observation/inference score using the planted encoding:
/// 1 when the decoded concept maps to the inference's scene, else 0.
double synth_rule_score(const DatasetSplit& split, const Observation& obs, const RegionBox& box,
                        std::string_view inference, std::size_t concepts, std::size_t region_side);

}  // namespace vpt
