// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "dcl/isla.hpp"

namespace dcl {

struct GeneratorConfig {
  int base_resolution = 4;
  int ch = 8;
  int n_blocks = 4;
  int image_dim = 64;    // d_z
  int style_width = 128; // d_e + d_y
  int categories = 7;
  double tomask_gain = 1.0;

  int output_size() const { return base_resolution << n_blocks; }
  /// Input channels of block k (k = n_blocks gives the final width).
  int channels(int k) const { return 16 * ch >> k; }
};

template <class Scalar>
struct Synthesis {
  Var<Scalar> image;    // (N, 3, H, W) in [-1, 1]
  Var<Scalar> h_final;  // (N, d_l, H, W)
};

/// Layout-conditioned image generator: a linear stem on z_x followed by doubling
/// ResBlocks whose normalization layers are ISLA-Norm with ToMask refinement.
template <class Scalar>
class Generator {
 public:
  Generator(const GeneratorConfig& config, ParameterStore<Scalar>& store, Rng& rng);

  /// z (N, d_z), h_init (N, d_l, s, s) with s a power of two no larger than the output,
  /// style (M, d_e + d_y). Throws ConfigMismatch on incompatible label maps or lattices.
  Synthesis<Scalar> synthesize(const Var<Scalar>& z, const Var<Scalar>& h_init, const Var<Scalar>& style,
                               const LayoutBatch& batch) const;

  void set_training(bool training) { training_ = training; }
  bool training() const { return training_; }
  const GeneratorConfig& config() const { return config_; }

 private:
  struct Block {
    ToMask<Scalar> mask1, mask2;
    BatchStandardizer<Scalar> norm1, norm2;
    Conv2d<Scalar> conv1, conv2, shortcut;
    Var<Scalar> style_projection;  // (d_e + d_y, 2 (C_in + C_out))
    Index c_in = 0, c_out = 0;
  };

  GeneratorConfig config_;
  Linear<Scalar> stem_;
  std::vector<Block> blocks_;
  Conv2d<Scalar> to_rgb_;
  bool training_ = true;
};

}  // namespace dcl
