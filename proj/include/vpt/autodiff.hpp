#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "vpt/matrix.hpp"

// Matrix-granular reverse-mode differentiation.
//
// Parameters live in a ParameterSet owned by the model. A Tape records one
// forward pass that reads (never writes) those parameters; after backward()
// the gradient of every parameter touched by the pass can be harvested into
// a Gradients buffer. One tape per sample lets forward/backward passes run
// concurrently against shared, read-only parameters.

namespace vpt::ad {

struct Parameter {
  std::string name;
  Matrix value;
};

class ParameterSet {
 public:
  std::size_t add(std::string name, Matrix init);
  std::size_t size() const { return params_.size(); }
  Parameter& operator[](std::size_t i) { return params_[i]; }
  const Parameter& operator[](std::size_t i) const { return params_[i]; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index(std::string_view name) const;  // throws if absent
  Matrix& value(std::string_view name) { return params_[index(name)].value; }
  const Matrix& value(std::string_view name) const { return params_[index(name)].value; }
  std::size_t scalar_count() const;

  auto begin() { return params_.begin(); }
  auto end() { return params_.end(); }
  auto begin() const { return params_.begin(); }
  auto end() const { return params_.end(); }

 private:
  std::vector<Parameter> params_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// One gradient matrix per parameter; empty matrices mean "untouched".
using Gradients = std::vector<Matrix>;

Gradients zero_gradients(const ParameterSet& params);
void add_into(Gradients& into, const Gradients& from);

class Tape;

/// Handle to a node on a tape. Cheap to copy.
struct Var {
  Tape* tape = nullptr;
  std::size_t id = 0;

  const Matrix& value() const;
  std::size_t rows() const { return value().rows(); }
  std::size_t cols() const { return value().cols(); }
};

class Tape {
 public:
  explicit Tape(const ParameterSet* params = nullptr) : params_(params) {}
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  Var constant(Matrix value);
  Var param(std::size_t index);
  Var param(std::string_view name);

  const Matrix& value(std::size_t id) const;
  const Matrix& grad(std::size_t id) const { return nodes_[id].grad; }
  Matrix& grad(std::size_t id) { return nodes_[id].grad; }
  bool needs_grad(std::size_t id) const { return nodes_[id].needs_grad; }

  using Backward = std::function<void(Tape&, std::size_t self)>;

  /// Records an op node. needs_grad is inherited from the inputs.
  Var record(Matrix value, std::span<const Var> inputs, Backward backward);

  /// Seeds d(out) = seed and propagates to every node created before out.
  void backward(Var out, const Matrix& seed);
  void backward_scalar(Var out);

  /// Adds the gradient of every parameter leaf into `into`.
  void accumulate_param_grads(Gradients& into) const;

  /// Adds g into the gradient slot of node `id` (allocating on first use).
  void add_grad(std::size_t id, const Matrix& g);
  Matrix& grad_slot(std::size_t id);

  std::size_t node_count() const { return nodes_.size(); }

 private:
  struct Node {
    Matrix value;
    const Matrix* param_value = nullptr;
    long param_index = -1;
    Matrix grad;
    Backward backward;
    bool needs_grad = false;
  };

  const ParameterSet* params_;
  std::vector<Node> nodes_;
  std::unordered_map<std::size_t, std::size_t> param_nodes_;
};

// Ops. All inputs must belong to the same tape.
Var matmul(Var a, Var b);
Var add(Var a, Var b);
Var add_bias(Var x, Var bias);  // bias is 1×cols, broadcast over rows
Var scale(Var x, double c);
Var layer_norm(Var x, Var gain, Var bias, double eps = 1e-5);
Var quick_gelu(Var x);
/// Multi-head scaled dot-product attention over a packed T×3w [Q | K | V] input.
Var attention(Var qkv, std::size_t heads, bool causal);
Var concat_rows(std::span<const Var> parts);
Var rows(Var x, std::size_t begin, std::size_t count);
Var gather_rows(Var table, std::span<const std::size_t> ids);
Var l2_normalize_rows(Var x);
/// Rounds values to float32; gradient passes straight through.
Var round_fp32(Var x);

}  // namespace vpt::ad
