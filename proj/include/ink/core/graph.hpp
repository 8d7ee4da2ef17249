// Copyright 2026 The ink authors. Apache 2.0 License.
//
// Define-by-run reverse-mode differentiation. Every operation on a Var is
// evaluated eagerly and recorded on the owning Graph; backward() walks the
// record in reverse. A graph can be re-evaluated in place with forward(),
// which re-reads parameters from the store and rebinds named inputs while
// keeping the recorded structure (used by finite-difference checks).

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ink/core/array.hpp"
#include "ink/core/param_store.hpp"

namespace ink {

using NodeId = std::uint32_t;

enum class OpKind : std::uint8_t {
  kInput,
  kConstant,
  kParam,
  kAdd,
  kSub,
  kMul,
  kDiv,
  kNeg,
  kAddScalar,
  kMulScalar,
  kMatMul,
  kTanh,
  kSigmoid,
  kExp,
  kLog,
  kSoftplus,
  kRelu,
  kSquare,
  kSoftmax,
  kConcat,
  kSlice,
  kRow,
  kSum,
  kMean,
  kClamp,
  kStopGradient,
};

const char* op_name(OpKind op);

class Graph;

/// Handle to a node of a Graph. Cheap to copy.
struct Var {
  Graph* graph = nullptr;
  NodeId id = 0;

  const Array& value() const;
  std::size_t size() const { return value().size(); }
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(const ParamStore& params) : params_(&params) {}
  Graph(const Graph&) = delete;
  Graph& operator=(const Graph&) = delete;

  /// Named leaf that forward() may rebind.
  Var input(std::string name, Array value);
  Var constant(Array value);
  Var scalar(Real v) { return constant(Array::scalar(v)); }
  /// Leaf bound to a store parameter. Repeated calls return the same node.
  Var param(std::string_view name);

  const Array& value(Var v) const { return nodes_[v.id].value; }
  std::size_t node_count() const { return nodes_.size(); }
  OpKind op(Var v) const { return nodes_[v.id].op; }
  std::span<const NodeId> inputs_of(Var v) const { return nodes_[v.id].inputs; }
  const ParamStore* params() const { return params_; }

  /// Re-evaluates every node in recorded order. Named inputs present in
  /// `inputs` are rebound first; parameters are re-read from the store.
  void forward(const std::map<std::string, Array>& inputs = {});

  /// Gradients of a scalar node with respect to every store parameter.
  /// Parameters not reached by the graph get zero arrays.
  Gradients backward(Var output);

  // Recording entry points, used by the free functions below.
  Var record(OpKind op, std::vector<NodeId> inputs, Real a = 0, Real b = 0,
             std::size_t i0 = 0, std::size_t i1 = 0);

 private:
  struct Node {
    OpKind op = OpKind::kConstant;
    bool needs_grad = false;
    std::vector<NodeId> inputs;
    Array value;
    Real a = 0;
    Real b = 0;
    std::size_t i0 = 0;
    std::size_t i1 = 0;
    std::string name;
  };

  void evaluate(NodeId id);
  void propagate(NodeId id, std::vector<Array>& grads, std::vector<char>& live);

  const ParamStore* params_ = nullptr;
  std::vector<Node> nodes_;
  std::unordered_map<std::string, NodeId> registry_;
};

// Elementwise binary ops accept equal shapes or a single-element operand.
Var add(Var a, Var b);
Var sub(Var a, Var b);
Var mul(Var a, Var b);
Var div(Var a, Var b);
Var neg(Var a);
Var add_scalar(Var a, Real c);
Var mul_scalar(Var a, Real c);
/// (m x k)(k) -> (m) or (m x k)(k x n) -> (m x n).
Var matmul(Var a, Var b);
Var tanh(Var a);
Var sigmoid(Var a);
Var exp(Var a);
Var log(Var a);
/// log(1 + exp(x)), overflow-safe.
Var softplus(Var a);
Var relu(Var a);
Var square(Var a);
/// Softmax over all elements of a vector.
Var softmax(Var a);
Var concat(std::span<const Var> parts);
Var concat(std::initializer_list<Var> parts);
Var slice(Var a, std::size_t offset, std::size_t length);
/// Element `index` of a vector as a scalar.
Var pick(Var a, std::size_t index);
/// Row `r` of a matrix as a vector.
Var row(Var a, std::size_t r);
Var sum(Var a);
Var mean(Var a);
/// Clamps into [lo, hi]; the gradient is zero outside the interval.
Var clamp(Var a, Real lo, Real hi);
Var stop_gradient(Var a);

inline Var operator+(Var a, Var b) { return add(a, b); }
inline Var operator-(Var a, Var b) { return sub(a, b); }
inline Var operator*(Var a, Var b) { return mul(a, b); }
inline Var operator/(Var a, Var b) { return div(a, b); }
inline Var operator-(Var a) { return neg(a); }

}  // namespace ink
