#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vpt/matrix.hpp"

namespace vpt {

// Named-tensor archive. Little-endian layout:
//   "VPTA"  u32 version  u64 meta_len  meta JSON  u32 count
//   per tensor: u32 name_len, name, u32 ndim, u64 dims[ndim], u8 dtype (0 f64, 1 f32), data
// Tensors of any rank load as a 2-D matrix: the first dim becomes rows and
// the rest are flattened into columns (rank 0 → 1×1, rank 1 → 1×n).

enum class DType : std::uint8_t { kF64 = 0, kF32 = 1 };

struct NamedTensor {
  std::string name;
  std::vector<std::uint64_t> dims;
  DType dtype = DType::kF64;
  std::vector<double> data;

  Matrix as_matrix() const;
  static NamedTensor from_matrix(std::string name, const Matrix& m, DType dtype = DType::kF64);
};

struct Archive {
  nlohmann::json meta = nlohmann::json::object();
  std::vector<NamedTensor> tensors;

  const NamedTensor* find(const std::string& name) const;
  const NamedTensor& at(const std::string& name) const;  // throws if absent
};

inline constexpr std::uint32_t kArchiveVersion = 1;

void write_archive(const std::filesystem::path& path, const Archive& archive);
Archive read_archive(const std::filesystem::path& path);

}  // namespace vpt
