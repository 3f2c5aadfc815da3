// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "dcl/autograd.hpp"

/// Differentiable tensor operations. Image-like tensors are (N, C, H, W),
/// matrices are rank-2 row-major.
namespace dcl::ops {

template <class Scalar>
using V = Var<Scalar>;

template <class Scalar> V<Scalar> constant(Tensor<Scalar> t);

// Elementwise.
template <class Scalar> V<Scalar> add(const V<Scalar>& a, const V<Scalar>& b);
template <class Scalar> V<Scalar> sub(const V<Scalar>& a, const V<Scalar>& b);
template <class Scalar> V<Scalar> mul(const V<Scalar>& a, const V<Scalar>& b);
template <class Scalar> V<Scalar> scale(const V<Scalar>& a, Scalar s);
template <class Scalar> V<Scalar> add_scalar(const V<Scalar>& a, Scalar s);
/// a * s for a single-element s; gradients reach both.
template <class Scalar> V<Scalar> scale_by(const V<Scalar>& a, const V<Scalar>& s);
template <class Scalar> V<Scalar> relu(const V<Scalar>& a);
template <class Scalar> V<Scalar> leaky_relu(const V<Scalar>& a, Scalar slope);
template <class Scalar> V<Scalar> tanh(const V<Scalar>& a);
template <class Scalar> V<Scalar> abs(const V<Scalar>& a);
/// log(max(a, eps)); the gradient vanishes where the clamp is active.
template <class Scalar> V<Scalar> log_clamped(const V<Scalar>& a, Scalar eps);

// Reductions.
template <class Scalar> V<Scalar> sum(const V<Scalar>& a);
template <class Scalar> V<Scalar> mean(const V<Scalar>& a);
/// (R, F) -> (R, 1) row sums.
template <class Scalar> V<Scalar> row_sum(const V<Scalar>& a);
/// (R, 1) values grouped by segment id -> (n_segments, 1) per-segment means.
template <class Scalar>
V<Scalar> segment_mean(const V<Scalar>& a, const std::vector<int>& segment, Index n_segments);

// Shape manipulation.
template <class Scalar> V<Scalar> reshape(const V<Scalar>& a, const Shape& s);
template <class Scalar> V<Scalar> concat_channels(const V<Scalar>& a, const V<Scalar>& b);
template <class Scalar> V<Scalar> slice_channels(const V<Scalar>& a, Index begin, Index count);
template <class Scalar> V<Scalar> concat_batch(const std::vector<V<Scalar>>& parts);
template <class Scalar> V<Scalar> slice_batch(const V<Scalar>& a, Index begin, Index count);
template <class Scalar> V<Scalar> concat_cols(const V<Scalar>& a, const V<Scalar>& b);
template <class Scalar> V<Scalar> slice_cols(const V<Scalar>& a, Index begin, Index count);
/// Rows of a (R, F) table selected by index; gradients scatter-add back.
template <class Scalar> V<Scalar> gather_rows(const V<Scalar>& table, const std::vector<int>& rows);

// Dense layers.
template <class Scalar> V<Scalar> matmul(const V<Scalar>& a, const V<Scalar>& b);
/// x (N, in), weight (out, in), bias (out) or undefined -> (N, out).
template <class Scalar> V<Scalar> linear(const V<Scalar>& x, const V<Scalar>& weight, const V<Scalar>& bias);

// Convolution and resampling.
/// Stride-1 convolution with square kernel (Cout, Cin, k, k) and symmetric zero padding.
template <class Scalar>
V<Scalar> conv2d(const V<Scalar>& x, const V<Scalar>& weight, const V<Scalar>& bias, int padding);
template <class Scalar> V<Scalar> upsample_nearest2x(const V<Scalar>& x);
template <class Scalar> V<Scalar> avg_pool2x(const V<Scalar>& x);
/// Bilinear resampling with half-pixel centers and edge clamping.
template <class Scalar> V<Scalar> resize_bilinear(const V<Scalar>& x, Index height, Index width);
/// (N, C, H, W) -> (N, C) sums over the spatial lattice.
template <class Scalar> V<Scalar> sum_spatial(const V<Scalar>& x);
/// Per-pixel channel broadcast: x (N, C, H, W) * s (N, 1, H, W).
template <class Scalar> V<Scalar> mul_channel_broadcast(const V<Scalar>& x, const V<Scalar>& s);

// Channel-wise probability maps.
template <class Scalar> V<Scalar> softmax_channels(const V<Scalar>& x);
template <class Scalar> V<Scalar> log_softmax_channels(const V<Scalar>& x);
/// Divides every pixel's channel vector by its sum.
template <class Scalar> V<Scalar> renormalize_channels(const V<Scalar>& x);

/// Batch statistics standardization over (N, H, W) per channel, population variance.
/// When the statistics outputs are given they receive the per-channel mean and variance.
template <class Scalar>
V<Scalar> batch_standardize(const V<Scalar>& x, Scalar eps, Tensor<Scalar>* mean_out = nullptr,
                            Tensor<Scalar>* var_out = nullptr);
/// Standardization with fixed statistics (evaluation mode).
template <class Scalar>
V<Scalar> standardize_with(const V<Scalar>& x, const Tensor<Scalar>& mean, const Tensor<Scalar>& var, Scalar eps);

// Fused losses.
/// Mean absolute difference over all elements.
template <class Scalar> V<Scalar> mean_abs_diff(const V<Scalar>& a, const V<Scalar>& b);
/// Mean over pixels of KL(target || pred) with eps inside both logarithms.
template <class Scalar> V<Scalar> mean_kl_channels(const V<Scalar>& target, const V<Scalar>& pred, Scalar eps);
/// Mean negative log-likelihood of hard labels (N*H*W entries) under log-probabilities (N, C, H, W).
template <class Scalar> V<Scalar> nll_hard(const V<Scalar>& log_probs, const std::vector<int>& labels);

}  // namespace dcl::ops
