// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>

#include "dcl/layout_batch.hpp"
#include "dcl/nn.hpp"

namespace dcl {

/// Per-instance channel affine parameters, rows aligned with LayoutBatch::instances.
template <class Scalar>
struct InstanceAffine {
  Var<Scalar> beta;   // (M, C)
  Var<Scalar> gamma;  // (M, C), 1 + raw projection
};

/// Splits a projected style matrix (M, 2C) into beta = [:, :C] and gamma = 1 + [:, C:].
template <class Scalar>
InstanceAffine<Scalar> split_affine(const Var<Scalar>& projected);

/// (beta, gamma) from S (M, d_e + d_y) times a projection W (d_e + d_y, 2C).
template <class Scalar>
InstanceAffine<Scalar> instance_affine(const Var<Scalar>& style, const Var<Scalar>& projection);

/// Per-pixel weighted average of instance rows (M, C) into a (N, C, H, W) map. Instance i
/// contributes to pixel p of its sample with weight raster_i(p) * h[l_i](p); the weight sum
/// is floored at eps. h is (N, d_l, H, W) and fixes the output resolution.
template <class Scalar>
Var<Scalar> assemble_instances(const Var<Scalar>& rows, const Var<Scalar>& h, const LayoutBatch& batch,
                               Scalar eps = Scalar(1e-8));

template <class Scalar>
struct SpatialAffine {
  Var<Scalar> beta;   // (N, C, H, W)
  Var<Scalar> gamma;  // (N, C, H, W)
};

template <class Scalar>
SpatialAffine<Scalar> assemble_spatial_affine(const InstanceAffine<Scalar>& affine, const Var<Scalar>& h,
                                              const LayoutBatch& batch);

/// gamma * f + beta, elementwise.
template <class Scalar>
Var<Scalar> recalibrate(const Var<Scalar>& standardized, const SpatialAffine<Scalar>& affine);

/// Batch-statistics standardization with running statistics for evaluation mode.
template <class Scalar>
class BatchStandardizer {
 public:
  BatchStandardizer() = default;
  BatchStandardizer(ParameterStore<Scalar>& store, const std::string& name, Index channels,
                    double momentum = 0.1, double eps = 1e-5);

  /// Throws DegenerateBatch when fewer than two values share a channel in training mode.
  Var<Scalar> operator()(const Var<Scalar>& x, bool training) const;

  const Tensor<Scalar>& running_mean() const { return *mean_; }
  const Tensor<Scalar>& running_var() const { return *var_; }

 private:
  std::shared_ptr<Tensor<Scalar>> mean_;
  std::shared_ptr<Tensor<Scalar>> var_;
  double momentum_ = 0.1;
  double eps_ = 1e-5;
};

/// Stateless standardization over (N, H, W) per channel.
template <class Scalar>
Var<Scalar> standardize(const Var<Scalar>& x, Scalar eps = Scalar(1e-5));

/// Label-map resampling: bilinear on probabilities, then per-pixel renormalization.
template <class Scalar>
Var<Scalar> resample_label_map(const Var<Scalar>& h, Index height, Index width);

/// Label-map refinement from intermediate features. A 1x1 projection of
/// concat(f, h) gives logits; the initial map enters through alpha * log(h_init).
template <class Scalar>
class ToMask {
 public:
  ToMask() = default;
  /// The h-part of the projection starts at identity_gain * I, the feature part near zero,
  /// alpha at alpha_init.
  ToMask(ParameterStore<Scalar>& store, const std::string& name, Index feature_channels, Index categories, Rng& rng,
         double identity_gain = 8.0, double alpha_init = 1.0);

  Var<Scalar> operator()(const Var<Scalar>& f, const Var<Scalar>& h, const Var<Scalar>& h_init) const;

  const Conv2d<Scalar>& projection() const { return projection_; }
  const Var<Scalar>& alpha() const { return alpha_; }

 private:
  Conv2d<Scalar> projection_;
  Var<Scalar> alpha_;
};

/// Free-function form with explicit state.
template <class Scalar>
Var<Scalar> update_label_map(const Var<Scalar>& f, const Var<Scalar>& h, const Var<Scalar>& h_init,
                             const ToMask<Scalar>& state);

}  // namespace dcl
