// Copyright 2026 The ink authors. Apache 2.0 License.

#include "ink/core/graph.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ink/core/error.hpp"

namespace ink {

namespace {

Real softplus_value(Real x) {
  // log(1 + e^x) = max(x, 0) + log1p(e^-|x|)
  return std::max(x, Real(0)) + std::log1p(std::exp(-std::abs(x)));
}

Real sigmoid_value(Real x) {
  if (x >= 0) {
    return Real(1) / (Real(1) + std::exp(-x));
  }
  Real e = std::exp(x);
  return e / (Real(1) + e);
}

[[noreturn]] void shape_error(NodeId id, OpKind op, const std::string& detail) {
  std::ostringstream os;
  os << "shape mismatch at node " << id << " (" << op_name(op) << "): " << detail;
  throw ShapeError(os.str());
}

Graph& same_graph(Var a, Var b) {
  if (a.graph == nullptr || a.graph != b.graph) {
    throw ContractError("operands belong to different graphs");
  }
  return *a.graph;
}

Graph& graph_of(Var a) {
  if (a.graph == nullptr) {
    throw ContractError("operation on an unbound Var");
  }
  return *a.graph;
}

}  // namespace

const char* op_name(OpKind op) {
  switch (op) {
    case OpKind::kInput: return "input";
    case OpKind::kConstant: return "constant";
    case OpKind::kParam: return "param";
    case OpKind::kAdd: return "add";
    case OpKind::kSub: return "sub";
    case OpKind::kMul: return "mul";
    case OpKind::kDiv: return "div";
    case OpKind::kNeg: return "neg";
    case OpKind::kAddScalar: return "add_scalar";
    case OpKind::kMulScalar: return "mul_scalar";
    case OpKind::kMatMul: return "matmul";
    case OpKind::kTanh: return "tanh";
    case OpKind::kSigmoid: return "sigmoid";
    case OpKind::kExp: return "exp";
    case OpKind::kLog: return "log";
    case OpKind::kSoftplus: return "softplus";
    case OpKind::kRelu: return "relu";
    case OpKind::kSquare: return "square";
    case OpKind::kSoftmax: return "softmax";
    case OpKind::kConcat: return "concat";
    case OpKind::kSlice: return "slice";
    case OpKind::kRow: return "row";
    case OpKind::kSum: return "sum";
    case OpKind::kMean: return "mean";
    case OpKind::kClamp: return "clamp";
    case OpKind::kStopGradient: return "stop_gradient";
  }
  return "unknown";
}

const Array& Var::value() const {
  if (graph == nullptr) {
    throw ContractError("value of an unbound Var");
  }
  return graph->value(*this);
}

Var Graph::input(std::string name, Array value) {
  Node node;
  node.op = OpKind::kInput;
  node.value = std::move(value);
  node.name = std::move(name);
  nodes_.push_back(std::move(node));
  NodeId id = static_cast<NodeId>(nodes_.size() - 1);
  evaluate(id);
  return Var{this, id};
}

Var Graph::constant(Array value) {
  Node node;
  node.op = OpKind::kConstant;
  node.value = std::move(value);
  nodes_.push_back(std::move(node));
  NodeId id = static_cast<NodeId>(nodes_.size() - 1);
  evaluate(id);
  return Var{this, id};
}

Var Graph::param(std::string_view name) {
  if (params_ == nullptr) {
    throw ContractError("graph has no parameter store");
  }
  std::string key(name);
  if (auto it = registry_.find(key); it != registry_.end()) {
    return Var{this, it->second};
  }
  Node node;
  node.op = OpKind::kParam;
  node.i0 = params_->index(name);
  node.name = key;
  node.needs_grad = true;
  nodes_.push_back(std::move(node));
  NodeId id = static_cast<NodeId>(nodes_.size() - 1);
  registry_.emplace(std::move(key), id);
  evaluate(id);
  return Var{this, id};
}

Var Graph::record(OpKind op, std::vector<NodeId> inputs, Real a, Real b, std::size_t i0,
                  std::size_t i1) {
  Node node;
  node.op = op;
  node.a = a;
  node.b = b;
  node.i0 = i0;
  node.i1 = i1;
  if (op != OpKind::kStopGradient) {
    for (NodeId in : inputs) {
      node.needs_grad = node.needs_grad || nodes_[in].needs_grad;
    }
  }
  node.inputs = std::move(inputs);
  nodes_.push_back(std::move(node));
  NodeId id = static_cast<NodeId>(nodes_.size() - 1);
  try {
    evaluate(id);
  } catch (...) {
    nodes_.pop_back();
    throw;
  }
  return Var{this, id};
}

void Graph::forward(const std::map<std::string, Array>& inputs) {
  for (NodeId id = 0; id < nodes_.size(); ++id) {
    Node& node = nodes_[id];
    if (node.op == OpKind::kInput && !inputs.empty()) {
      if (auto it = inputs.find(node.name); it != inputs.end()) {
        if (!(it->second.shape() == node.value.shape())) {
          shape_error(id, node.op, "input '" + node.name + "' rebound with shape " +
                                       it->second.shape().str() + ", expected " +
                                       node.value.shape().str());
        }
        node.value = it->second;
      }
    }
    evaluate(id);
  }
}

void Graph::evaluate(NodeId id) {
  Node& n = nodes_[id];
  auto in = [&](std::size_t k) -> const Array& { return nodes_[n.inputs[k]].value; };

  switch (n.op) {
    case OpKind::kInput:
    case OpKind::kConstant:
      break;
    case OpKind::kParam:
      n.value = params_->at(n.i0);
      break;
    case OpKind::kAdd:
    case OpKind::kSub:
    case OpKind::kMul:
    case OpKind::kDiv: {
      const Array& x = in(0);
      const Array& y = in(1);
      const bool same = x.shape() == y.shape();
      if (!same && x.size() != 1 && y.size() != 1) {
        shape_error(id, n.op, x.shape().str() + " vs " + y.shape().str());
      }
      const Shape out_shape = (same || y.size() == 1) ? x.shape() : y.shape();
      const std::size_t count = out_shape.elements();
      if (!(n.value.shape() == out_shape)) {
        n.value = Array(out_shape);
      }
      const std::size_t sx = x.size() == 1 ? 0 : 1;
      const std::size_t sy = y.size() == 1 ? 0 : 1;
      Real* out = n.value.data().data();
      const Real* px = x.data().data();
      const Real* py = y.data().data();
      switch (n.op) {
        case OpKind::kAdd:
          for (std::size_t i = 0; i < count; ++i) out[i] = px[i * sx] + py[i * sy];
          break;
        case OpKind::kSub:
          for (std::size_t i = 0; i < count; ++i) out[i] = px[i * sx] - py[i * sy];
          break;
        case OpKind::kMul:
          for (std::size_t i = 0; i < count; ++i) out[i] = px[i * sx] * py[i * sy];
          break;
        default:
          for (std::size_t i = 0; i < count; ++i) out[i] = px[i * sx] / py[i * sy];
          break;
      }
      break;
    }
    case OpKind::kNeg:
    case OpKind::kAddScalar:
    case OpKind::kMulScalar:
    case OpKind::kTanh:
    case OpKind::kSigmoid:
    case OpKind::kExp:
    case OpKind::kLog:
    case OpKind::kSoftplus:
    case OpKind::kRelu:
    case OpKind::kSquare:
    case OpKind::kClamp:
    case OpKind::kStopGradient: {
      const Array& x = in(0);
      if (!(n.value.shape() == x.shape())) {
        n.value = Array(x.shape());
      }
      const Real* px = x.data().data();
      Real* out = n.value.data().data();
      const std::size_t count = x.size();
      for (std::size_t i = 0; i < count; ++i) {
        const Real v = px[i];
        Real r = v;
        switch (n.op) {
          case OpKind::kNeg: r = -v; break;
          case OpKind::kAddScalar: r = v + n.a; break;
          case OpKind::kMulScalar: r = v * n.a; break;
          case OpKind::kTanh: r = std::tanh(v); break;
          case OpKind::kSigmoid: r = sigmoid_value(v); break;
          case OpKind::kExp: r = std::exp(v); break;
          case OpKind::kLog: r = std::log(v); break;
          case OpKind::kSoftplus: r = softplus_value(v); break;
          case OpKind::kRelu: r = v > 0 ? v : Real(0); break;
          case OpKind::kSquare: r = v * v; break;
          case OpKind::kClamp: r = std::clamp(v, n.a, n.b); break;
          default: break;
        }
        out[i] = r;
      }
      break;
    }
    case OpKind::kMatMul: {
      const Array& a = in(0);
      const Array& b = in(1);
      if (a.rank() != 2 || b.rank() < 1 || b.rows() != a.cols()) {
        shape_error(id, n.op, a.shape().str() + " x " + b.shape().str());
      }
      const std::size_t m = a.rows();
      const std::size_t k = a.cols();
      const std::size_t cols = b.rank() == 2 ? b.cols() : 1;
      const Shape out_shape = b.rank() == 2 ? Shape::matrix(m, cols) : Shape::vector(m);
      if (!(n.value.shape() == out_shape)) {
        n.value = Array(out_shape);
      }
      const Real* pa = a.data().data();
      const Real* pb = b.data().data();
      Real* out = n.value.data().data();
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
          Real acc = 0;
          const Real* arow = pa + i * k;
          for (std::size_t p = 0; p < k; ++p) acc += arow[p] * pb[p * cols + j];
          out[i * cols + j] = acc;
        }
      }
      break;
    }
    case OpKind::kSoftmax: {
      const Array& x = in(0);
      if (x.rank() != 1 || x.size() == 0) {
        shape_error(id, n.op, "expected a non-empty vector, got " + x.shape().str());
      }
      if (!(n.value.shape() == x.shape())) {
        n.value = Array(x.shape());
      }
      Real mx = x[0];
      for (std::size_t i = 1; i < x.size(); ++i) mx = std::max(mx, x[i]);
      Real total = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        n.value[i] = std::exp(x[i] - mx);
        total += n.value[i];
      }
      for (std::size_t i = 0; i < x.size(); ++i) n.value[i] /= total;
      break;
    }
    case OpKind::kConcat: {
      std::size_t total = 0;
      for (std::size_t k = 0; k < n.inputs.size(); ++k) {
        if (in(k).rank() > 1) {
          shape_error(id, n.op, "cannot concatenate " + in(k).shape().str());
        }
        total += in(k).size();
      }
      if (n.value.size() != total || n.value.rank() != 1) {
        n.value = Array(Shape::vector(total));
      }
      std::size_t offset = 0;
      for (std::size_t k = 0; k < n.inputs.size(); ++k) {
        const Array& part = in(k);
        std::copy(part.data().begin(), part.data().end(), n.value.data().begin() + offset);
        offset += part.size();
      }
      break;
    }
    case OpKind::kSlice: {
      const Array& x = in(0);
      if (x.rank() != 1 || n.i0 + n.i1 > x.size()) {
        shape_error(id, n.op,
                    "slice [" + std::to_string(n.i0) + ", +" + std::to_string(n.i1) +
                        ") of " + x.shape().str());
      }
      if (n.value.size() != n.i1) {
        n.value = Array(Shape::vector(n.i1));
      }
      std::copy_n(x.data().begin() + n.i0, n.i1, n.value.data().begin());
      break;
    }
    case OpKind::kRow: {
      const Array& x = in(0);
      if (x.rank() != 2 || n.i0 >= x.rows()) {
        shape_error(id, n.op, "row " + std::to_string(n.i0) + " of " + x.shape().str());
      }
      const std::size_t cols = x.cols();
      if (n.value.size() != cols) {
        n.value = Array(Shape::vector(cols));
      }
      std::copy_n(x.data().begin() + n.i0 * cols, cols, n.value.data().begin());
      break;
    }
    case OpKind::kSum:
    case OpKind::kMean: {
      const Array& x = in(0);
      Real total = 0;
      for (Real v : x.data()) total += v;
      if (n.op == OpKind::kMean) {
        if (x.size() == 0) shape_error(id, n.op, "mean of an empty array");
        total /= static_cast<Real>(x.size());
      }
      n.value = Array::scalar(total);
      break;
    }
  }

  if (!n.value.all_finite()) {
    std::ostringstream os;
    os << "non-finite value at node " << id << " (" << op_name(n.op) << ")";
    if (!n.name.empty()) os << " '" << n.name << "'";
    throw NumericError(os.str());
  }
}

Gradients Graph::backward(Var output) {
  if (output.graph != this) {
    throw ContractError("backward: output node belongs to another graph");
  }
  if (nodes_[output.id].value.size() != 1) {
    throw ContractError("backward: output node " + std::to_string(output.id) +
                        " is not scalar (shape " + nodes_[output.id].value.shape().str() + ")");
  }
  if (params_ == nullptr) {
    throw ContractError("backward: graph has no parameter store");
  }

  std::vector<Array> grads(output.id + 1);
  std::vector<char> live(output.id + 1, 0);
  grads[output.id] = Array(nodes_[output.id].value.shape(), Real(1));
  live[output.id] = 1;
  for (NodeId id = output.id + 1; id-- > 0;) {
    if (live[id] && nodes_[id].needs_grad) {
      propagate(id, grads, live);
    }
  }

  Gradients result(*params_);
  for (const auto& [name, id] : registry_) {
    if (id <= output.id && live[id]) {
      result[nodes_[id].i0] = std::move(grads[id]);
    }
  }
  return result;
}

void Graph::propagate(NodeId id, std::vector<Array>& grads, std::vector<char>& live) {
  const Node& n = nodes_[id];
  const Array& g = grads[id];

  auto target = [&](std::size_t k) -> Array* {
    NodeId in = n.inputs[k];
    if (!nodes_[in].needs_grad) return nullptr;
    if (!live[in]) {
      grads[in] = Array(nodes_[in].value.shape());
      live[in] = 1;
    }
    return &grads[in];
  };
  auto in = [&](std::size_t k) -> const Array& { return nodes_[n.inputs[k]].value; };

  switch (n.op) {
    case OpKind::kInput:
    case OpKind::kConstant:
    case OpKind::kParam:
    case OpKind::kStopGradient:
      break;
    case OpKind::kAdd:
    case OpKind::kSub:
    case OpKind::kMul:
    case OpKind::kDiv: {
      const Array& x = in(0);
      const Array& y = in(1);
      const std::size_t sx = x.size() == 1 && n.value.size() != 1 ? 0 : 1;
      const std::size_t sy = y.size() == 1 && n.value.size() != 1 ? 0 : 1;
      const std::size_t count = n.value.size();
      if (Array* gx = target(0)) {
        Real* dx = gx->data().data();
        for (std::size_t i = 0; i < count; ++i) {
          Real d = g[i];
          if (n.op == OpKind::kMul) d *= y[i * sy];
          if (n.op == OpKind::kDiv) d /= y[i * sy];
          dx[i * sx] += d;
        }
      }
      if (Array* gy = target(1)) {
        Real* dy = gy->data().data();
        for (std::size_t i = 0; i < count; ++i) {
          Real d = g[i];
          switch (n.op) {
            case OpKind::kSub: d = -d; break;
            case OpKind::kMul: d *= x[i * sx]; break;
            case OpKind::kDiv: d *= -n.value[i] / y[i * sy]; break;
            default: break;
          }
          dy[i * sy] += d;
        }
      }
      break;
    }
    case OpKind::kNeg:
    case OpKind::kAddScalar:
    case OpKind::kMulScalar:
    case OpKind::kTanh:
    case OpKind::kSigmoid:
    case OpKind::kExp:
    case OpKind::kLog:
    case OpKind::kSoftplus:
    case OpKind::kRelu:
    case OpKind::kSquare:
    case OpKind::kClamp: {
      Array* gx = target(0);
      if (gx == nullptr) break;
      const Array& x = in(0);
      const Array& y = n.value;
      for (std::size_t i = 0; i < x.size(); ++i) {
        Real local = 1;
        switch (n.op) {
          case OpKind::kNeg: local = -1; break;
          case OpKind::kMulScalar: local = n.a; break;
          case OpKind::kTanh: local = 1 - y[i] * y[i]; break;
          case OpKind::kSigmoid: local = y[i] * (1 - y[i]); break;
          case OpKind::kExp: local = y[i]; break;
          case OpKind::kLog: local = 1 / x[i]; break;
          case OpKind::kSoftplus: local = sigmoid_value(x[i]); break;
          case OpKind::kRelu: local = x[i] > 0 ? 1 : 0; break;
          case OpKind::kSquare: local = 2 * x[i]; break;
          case OpKind::kClamp: local = (x[i] >= n.a && x[i] <= n.b) ? 1 : 0; break;
          default: break;
        }
        (*gx)[i] += g[i] * local;
      }
      break;
    }
    case OpKind::kMatMul: {
      const Array& a = in(0);
      const Array& b = in(1);
      const std::size_t m = a.rows();
      const std::size_t k = a.cols();
      const std::size_t cols = b.rank() == 2 ? b.cols() : 1;
      if (Array* ga = target(0)) {
        Real* da = ga->data().data();
        for (std::size_t i = 0; i < m; ++i) {
          Real* drow = da + i * k;
          for (std::size_t j = 0; j < cols; ++j) {
            const Real gij = g[i * cols + j];
            if (gij == 0) continue;
            for (std::size_t p = 0; p < k; ++p) drow[p] += gij * b[p * cols + j];
          }
        }
      }
      if (Array* gb = target(1)) {
        Real* db = gb->data().data();
        for (std::size_t i = 0; i < m; ++i) {
          const Real* arow = a.data().data() + i * k;
          for (std::size_t j = 0; j < cols; ++j) {
            const Real gij = g[i * cols + j];
            if (gij == 0) continue;
            for (std::size_t p = 0; p < k; ++p) db[p * cols + j] += gij * arow[p];
          }
        }
      }
      break;
    }
    case OpKind::kSoftmax: {
      Array* gx = target(0);
      if (gx == nullptr) break;
      const Array& y = n.value;
      Real dot = 0;
      for (std::size_t i = 0; i < y.size(); ++i) dot += g[i] * y[i];
      for (std::size_t i = 0; i < y.size(); ++i) (*gx)[i] += y[i] * (g[i] - dot);
      break;
    }
    case OpKind::kConcat: {
      std::size_t offset = 0;
      for (std::size_t k = 0; k < n.inputs.size(); ++k) {
        const std::size_t len = in(k).size();
        if (Array* gk = target(k)) {
          for (std::size_t i = 0; i < len; ++i) (*gk)[i] += g[offset + i];
        }
        offset += len;
      }
      break;
    }
    case OpKind::kSlice: {
      if (Array* gx = target(0)) {
        for (std::size_t i = 0; i < n.i1; ++i) (*gx)[n.i0 + i] += g[i];
      }
      break;
    }
    case OpKind::kRow: {
      if (Array* gx = target(0)) {
        const std::size_t cols = in(0).cols();
        for (std::size_t i = 0; i < cols; ++i) (*gx)[n.i0 * cols + i] += g[i];
      }
      break;
    }
    case OpKind::kSum:
    case OpKind::kMean: {
      if (Array* gx = target(0)) {
        Real d = g[0];
        if (n.op == OpKind::kMean) d /= static_cast<Real>(gx->size());
        for (Real& v : gx->data()) v += d;
      }
      break;
    }
  }
}

// ---------------------------------------------------------------------------

Var add(Var a, Var b) { return same_graph(a, b).record(OpKind::kAdd, {a.id, b.id}); }
Var sub(Var a, Var b) { return same_graph(a, b).record(OpKind::kSub, {a.id, b.id}); }
Var mul(Var a, Var b) { return same_graph(a, b).record(OpKind::kMul, {a.id, b.id}); }
Var div(Var a, Var b) { return same_graph(a, b).record(OpKind::kDiv, {a.id, b.id}); }
Var neg(Var a) { return graph_of(a).record(OpKind::kNeg, {a.id}); }
Var add_scalar(Var a, Real c) { return graph_of(a).record(OpKind::kAddScalar, {a.id}, c); }
Var mul_scalar(Var a, Real c) { return graph_of(a).record(OpKind::kMulScalar, {a.id}, c); }
Var matmul(Var a, Var b) { return same_graph(a, b).record(OpKind::kMatMul, {a.id, b.id}); }
Var tanh(Var a) { return graph_of(a).record(OpKind::kTanh, {a.id}); }
Var sigmoid(Var a) { return graph_of(a).record(OpKind::kSigmoid, {a.id}); }
Var exp(Var a) { return graph_of(a).record(OpKind::kExp, {a.id}); }
Var log(Var a) { return graph_of(a).record(OpKind::kLog, {a.id}); }
Var softplus(Var a) { return graph_of(a).record(OpKind::kSoftplus, {a.id}); }
Var relu(Var a) { return graph_of(a).record(OpKind::kRelu, {a.id}); }
Var square(Var a) { return graph_of(a).record(OpKind::kSquare, {a.id}); }
Var softmax(Var a) { return graph_of(a).record(OpKind::kSoftmax, {a.id}); }

Var concat(std::span<const Var> parts) {
  if (parts.empty()) {
    throw ContractError("concat of zero parts");
  }
  Graph& g = graph_of(parts.front());
  std::vector<NodeId> ids;
  ids.reserve(parts.size());
  for (const Var& p : parts) {
    same_graph(parts.front(), p);
    ids.push_back(p.id);
  }
  return g.record(OpKind::kConcat, std::move(ids));
}

Var concat(std::initializer_list<Var> parts) {
  return concat(std::span<const Var>(parts.begin(), parts.size()));
}

Var slice(Var a, std::size_t offset, std::size_t length) {
  return graph_of(a).record(OpKind::kSlice, {a.id}, 0, 0, offset, length);
}

Var pick(Var a, std::size_t index) { return slice(a, index, 1); }

Var row(Var a, std::size_t r) { return graph_of(a).record(OpKind::kRow, {a.id}, 0, 0, r); }
Var sum(Var a) { return graph_of(a).record(OpKind::kSum, {a.id}); }
Var mean(Var a) { return graph_of(a).record(OpKind::kMean, {a.id}); }

Var clamp(Var a, Real lo, Real hi) {
  if (!(lo <= hi)) {
    throw ContractError("clamp: empty interval");
  }
  return graph_of(a).record(OpKind::kClamp, {a.id}, lo, hi);
}

Var stop_gradient(Var a) { return graph_of(a).record(OpKind::kStopGradient, {a.id}); }

}  // namespace ink
