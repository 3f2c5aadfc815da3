// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "dcl/layout.hpp"
#include "dcl/nn.hpp"

namespace dcl {

struct InferenceConfig {
  int depth = 3;
  int base_channels = 32;
  int categories = 7;
  int image_size = 64;
};

/// U-Net label-map predictor without normalization layers.
template <class Scalar>
class InferenceNet {
 public:
  InferenceNet(const InferenceConfig& config, ParameterStore<Scalar>& store, Rng& rng);

  /// (N, 3, H, W) -> per-pixel logits (N, d_l, H, W). Throws ShapeMismatch on a lattice mismatch.
  Var<Scalar> logits(const Var<Scalar>& images) const;
  /// Softmax of logits(): the soft label map.
  Var<Scalar> infer(const Var<Scalar>& images) const;

  const InferenceConfig& config() const { return config_; }

 private:
  struct Stage {
    Conv2d<Scalar> a, b;
  };
  InferenceConfig config_;
  std::vector<Stage> down_;
  Stage bottom_;
  std::vector<Stage> up_;
  Conv2d<Scalar> head_;
};

/// Per-pixel argmax, ties toward the smallest category index. probs is (N, d_l, H, W).
template <class Scalar>
std::vector<HardLabelMap> hard_predict(const Tensor<Scalar>& probs);

}  // namespace dcl
