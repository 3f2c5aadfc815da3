// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <memory>
#include <unordered_set>
#include <vector>

#include "dcl/tensor.hpp"

namespace dcl {

template <class Scalar>
struct Node {
  Tensor<Scalar> value;
  Tensor<Scalar> grad;
  bool requires_grad = false;
  std::vector<std::shared_ptr<Node>> parents;
  std::function<void(Node&)> backward;

  /// Gradient storage, zero-initialized on first touch.
  Tensor<Scalar>& grad_buffer() {
    if (grad.empty()) grad = Tensor<Scalar>::zeros(value.shape());
    return grad;
  }
};

/// Process-wide switch for graph recording; see NoGradGuard.
inline bool& grad_mode_enabled() {
  thread_local bool enabled = true;
  return enabled;
}

class NoGradGuard {
 public:
  NoGradGuard() : previous_(grad_mode_enabled()) { grad_mode_enabled() = false; }
  ~NoGradGuard() { grad_mode_enabled() = previous_; }
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;

 private:
  bool previous_;
};

/// Handle to a node of the dynamic computation graph.
template <class Scalar>
class Var {
 public:
  using NodeType = Node<Scalar>;
  using BackwardFn = std::function<void(NodeType&)>;

  Var() = default;
  explicit Var(Tensor<Scalar> value, bool requires_grad = false) : node_(std::make_shared<NodeType>()) {
    node_->value = std::move(value);
    node_->requires_grad = requires_grad;
  }

  /// Result of an operation. The node records its parents only when gradients are wanted.
  static Var make(Tensor<Scalar> value, std::vector<Var> parents, BackwardFn backward) {
    Var out(std::move(value));
    if (!grad_mode_enabled()) return out;
    bool any = false;
    for (const Var& p : parents) any = any || (p.defined() && p.requires_grad());
    if (!any) return out;
    out.node_->requires_grad = true;
    out.node_->parents.reserve(parents.size());
    for (const Var& p : parents) out.node_->parents.push_back(p.node_);
    out.node_->backward = std::move(backward);
    return out;
  }

  bool defined() const { return static_cast<bool>(node_); }
  const Tensor<Scalar>& value() const { return node_->value; }
  Tensor<Scalar>& mutable_value() { return node_->value; }
  const Tensor<Scalar>& grad() const { return node_->grad; }
  Tensor<Scalar>& grad_buffer() { return node_->grad_buffer(); }
  bool requires_grad() const { return node_ && node_->requires_grad; }
  void set_requires_grad(bool r) { node_->requires_grad = r; }
  const Shape& shape() const { return node_->value.shape(); }
  const std::shared_ptr<NodeType>& node() const { return node_; }

  void zero_grad() {
    if (!node_->grad.empty()) node_->grad.array().setZero();
  }

  Var detach() const { return Var(node_->value, false); }

 private:
  std::shared_ptr<NodeType> node_;
};

/// Accumulates d(root)/d(leaf) into every reachable node that requires gradients.
/// The root must hold a single element.
template <class Scalar>
void backward(const Var<Scalar>& root) {
  using NodePtr = std::shared_ptr<Node<Scalar>>;
  if (!root.requires_grad()) return;
  if (root.value().size() != 1) throw ShapeMismatch("backward() needs a scalar root, got " + root.shape().str());

  std::vector<Node<Scalar>*> order;
  std::unordered_set<Node<Scalar>*> seen;
  std::vector<std::pair<Node<Scalar>*, std::size_t>> stack;
  stack.emplace_back(root.node().get(), 0);
  seen.insert(root.node().get());
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    if (next < node->parents.size()) {
      const NodePtr& p = node->parents[next++];
      if (p && p->requires_grad && seen.insert(p.get()).second) stack.emplace_back(p.get(), 0);
    } else {
      order.push_back(node);
      stack.pop_back();
    }
  }

  root.node()->grad_buffer().array() += Scalar(1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Node<Scalar>* n = *it;
    if (n->backward && !n->grad.empty()) n->backward(*n);
  }
}

/// Gradient accumulation helper for use inside backward closures.
template <class Scalar>
inline Tensor<Scalar>* grad_of(Node<Scalar>& self, std::size_t parent) {
  auto& p = self.parents[parent];
  if (!p || !p->requires_grad) return nullptr;
  return &p->grad_buffer();
}

}  // namespace dcl
