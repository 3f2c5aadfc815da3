// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "dcl/layout_batch.hpp"
#include "dcl/nn.hpp"

namespace dcl {

/// A foreground object of a scored image batch.
struct ObjectRoI {
  int sample = 0;  // image index in the scored batch
  int category = 0;
  Box box;
};

/// Foreground instances of a layout batch (background excluded), with sample indices shifted by offset.
std::vector<ObjectRoI> object_rois(const LayoutBatch& batch, int sample_offset = 0);

/// Bilinear RoI sampling: (B, C, H, W) features -> (R, C, s, s). Grid point (j, k) of a box sits
/// at x0 + (k + 0.5) / s * (x1 - x0) (likewise for y) in normalized coordinates, sampled with
/// half-pixel centers and edge clamping. A box covering no cell center at this resolution
/// reads the nearest cell at every grid point.
template <class Scalar>
Var<Scalar> roi_extract(const Var<Scalar>& features, const std::vector<ObjectRoI>& rois, int out_size);

template <class Scalar>
struct DiscriminatorScores {
  Var<Scalar> p_img;             // (B, 1)
  Var<Scalar> p_obj;             // (R, 1), ordered like the RoI list
  std::vector<int> obj_sample;   // image index of each object row
  Index batch = 0;
};

struct DiscriminatorConfig {
  int ch = 16;
  int categories = 7;
  int image_size = 64;
  int roi_size = 8;
};

/// Spectrally normalized convolution.
template <class Scalar>
struct SNConv {
  SpectralNorm<Scalar> sn;
  Var<Scalar> bias;
  int padding = 0;
  Var<Scalar> operator()(const Var<Scalar>& x, bool update) const { return ops::conv2d(x, sn(update), bias, padding); }
};

/// ResNet discriminator with an image head and a projection-conditioned object head on RoI features.
template <class Scalar>
class Discriminator {
 public:
  Discriminator(const DiscriminatorConfig& config, ParameterStore<Scalar>& store, Rng& rng);

  /// With update_sn set, every spectral norm advances its power iteration (discriminator steps only).
  DiscriminatorScores<Scalar> score(const Var<Scalar>& images, const std::vector<ObjectRoI>& rois,
                                    bool update_sn) const;
  DiscriminatorScores<Scalar> score(const Var<Scalar>& images, const LayoutBatch& batch, bool update_sn) const;

  /// Raw head weights, for inspection and tests.
  std::vector<Var<Scalar>> head_parameters() const;
  const DiscriminatorConfig& config() const { return config_; }

 private:
  struct DownBlock {
    SNConv<Scalar> conv1, conv2, shortcut;
    bool first = false;
    Var<Scalar> operator()(const Var<Scalar>& x, bool update) const;
  };

  DiscriminatorConfig config_;
  std::vector<DownBlock> blocks_;  // 64 -> 32 -> 16 -> 8 -> 4
  DownBlock object_block_;
  SpectralNorm<Scalar> image_head_;
  Var<Scalar> image_bias_;
  SpectralNorm<Scalar> object_head_;
  Var<Scalar> object_bias_;
  SpectralNorm<Scalar> object_embedding_;
  int roi_stage_ = 1;  // object features are read after this block
};

}  // namespace dcl
