#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace vpt {

// Word-level toy tokenizer with a fixed 64-symbol vocabulary:
//   0 <eot>, 1 <unk>, 2..11 the digits 0-9, 12 "object", 13 "scene",
//   14..63 FNV-1a hash buckets for every other word.
// Words split on whitespace, '_' and punctuation; digit runs become one
// token per digit; letters are lower-cased.
inline constexpr std::size_t kVocabSize = 64;
inline constexpr std::size_t kEotToken = 0;
inline constexpr std::size_t kUnkToken = 1;

struct Tokenized {
  std::vector<std::size_t> ids;  // always ends with kEotToken
  bool truncated = false;
};

/// Throws on text without any word. Over-long input is cut to
/// max_length - 1 words plus <eot>, with a logged warning.
Tokenized tokenize(std::string_view text, std::size_t max_length);

}  // namespace vpt
