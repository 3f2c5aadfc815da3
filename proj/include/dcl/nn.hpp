// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dcl/autograd.hpp"
#include "dcl/ops.hpp"

namespace dcl {

using Rng = std::mt19937_64;

/// Named, ordered set of trainable parameters plus non-trainable buffers
/// (running statistics, power-iteration vectors). Order is insertion order and
/// defines the checkpoint layout.
template <class Scalar>
class ParameterStore {
 public:
  using Param = std::pair<std::string, Var<Scalar>>;
  using Buffer = std::pair<std::string, std::shared_ptr<Tensor<Scalar>>>;

  explicit ParameterStore(std::string prefix = {}) : prefix_(std::move(prefix)) {}

  Var<Scalar> add_param(const std::string& name, Tensor<Scalar> init);
  std::shared_ptr<Tensor<Scalar>> add_buffer(const std::string& name, Tensor<Scalar> init);

  const std::vector<Param>& params() const { return params_; }
  const std::vector<Buffer>& buffers() const { return buffers_; }
  const std::string& prefix() const { return prefix_; }

  Var<Scalar> param(const std::string& name) const;
  Index numel() const;

  void zero_grad();
  void set_requires_grad(bool value);
  /// L2 norm of all accumulated gradients (0 when none were touched).
  double grad_norm() const;
  /// Rescales gradients so their joint L2 norm is at most max_norm.
  void clip_grad_norm(double max_norm);

 private:
  std::string prefix_;
  std::vector<Param> params_;
  std::vector<Buffer> buffers_;
};

/// Temporarily disables gradient tracking for every parameter of a store.
template <class Scalar>
class FreezeGuard {
 public:
  explicit FreezeGuard(ParameterStore<Scalar>& store) : store_(store) { store_.set_requires_grad(false); }
  ~FreezeGuard() { store_.set_requires_grad(true); }
  FreezeGuard(const FreezeGuard&) = delete;
  FreezeGuard& operator=(const FreezeGuard&) = delete;

 private:
  ParameterStore<Scalar>& store_;
};

namespace init {

template <class Scalar> Tensor<Scalar> normal(const Shape& s, double stddev, Rng& rng);
/// He initialization for rectified layers: N(0, 2 / fan_in).
template <class Scalar> Tensor<Scalar> kaiming(const Shape& s, Index fan_in, Rng& rng);
/// Glorot normal initialization: N(0, 2 / (fan_in + fan_out)).
template <class Scalar> Tensor<Scalar> xavier(const Shape& s, Index fan_in, Index fan_out, Rng& rng);
/// Rows x cols matrix with orthonormal rows (or columns, whichever is shorter), scaled by gain.
template <class Scalar> Tensor<Scalar> orthogonal(Index rows, Index cols, double gain, Rng& rng);

}  // namespace init

template <class Scalar>
struct Conv2d {
  Var<Scalar> weight;
  Var<Scalar> bias;
  int padding = 0;

  Var<Scalar> operator()(const Var<Scalar>& x) const { return ops::conv2d(x, weight, bias, padding); }
};

enum class InitKind { kaiming, xavier, zeros };

template <class Scalar>
Conv2d<Scalar> make_conv(ParameterStore<Scalar>& store, const std::string& name, Index cin, Index cout, int k,
                         Rng& rng, InitKind kind = InitKind::kaiming, bool with_bias = true);

template <class Scalar>
struct Linear {
  Var<Scalar> weight;  // (out, in)
  Var<Scalar> bias;    // (out)

  Var<Scalar> operator()(const Var<Scalar>& x) const { return ops::linear(x, weight, bias); }
};

template <class Scalar>
Linear<Scalar> make_linear(ParameterStore<Scalar>& store, const std::string& name, Index in, Index out, Rng& rng,
                           InitKind kind = InitKind::xavier, bool with_bias = true);

/// Spectral normalization W / sigma(W) with one power iteration per update.
/// The left and right singular vector estimates are buffers of the owning store.
template <class Scalar>
class SpectralNorm {
 public:
  SpectralNorm() = default;
  SpectralNorm(ParameterStore<Scalar>& store, const std::string& name, const Var<Scalar>& weight, Rng& rng);

  /// Normalized weight. With update set, advances the power iteration first.
  Var<Scalar> operator()(bool update) const;
  const Var<Scalar>& weight() const { return weight_; }

 private:
  Var<Scalar> weight_;
  std::shared_ptr<Tensor<Scalar>> u_;
  std::shared_ptr<Tensor<Scalar>> v_;
};

struct AdamConfig {
  double learning_rate = 1e-4;
  double beta1 = 0.0;
  double beta2 = 0.999;
  double eps = 1e-8;
};

template <class Scalar>
class Adam {
 public:
  Adam(ParameterStore<Scalar>& store, AdamConfig config);

  void step();
  long steps() const { return t_; }
  const AdamConfig& config() const { return config_; }

  // Moment estimates in parameter order, for checkpointing.
  std::vector<Tensor<Scalar>>& first_moments() { return m_; }
  std::vector<Tensor<Scalar>>& second_moments() { return v_; }
  const std::vector<Tensor<Scalar>>& first_moments() const { return m_; }
  const std::vector<Tensor<Scalar>>& second_moments() const { return v_; }
  void set_steps(long t) { t_ = t; }

 private:
  ParameterStore<Scalar>* store_;
  AdamConfig config_;
  std::vector<Tensor<Scalar>> m_;
  std::vector<Tensor<Scalar>> v_;
  long t_ = 0;
};

}  // namespace dcl
