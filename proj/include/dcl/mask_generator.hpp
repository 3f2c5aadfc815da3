// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "dcl/layout_batch.hpp"
#include "dcl/nn.hpp"

namespace dcl {

/// Image style code and per-instance style codes (one row per layout box,
/// including the background instance).
struct LatentBundle {
  Eigen::VectorXd image_code;        // (d_z)
  Eigen::MatrixXd instance_codes;    // (m + 1, d_y)
};

/// i.i.d. standard normal codes, deterministic in (layout size, seed).
LatentBundle sample_latents(const Layout& layout, std::uint64_t seed, int image_dim, int style_dim);

struct MaskGeneratorConfig {
  int categories = 7;
  int embed_dim = 64;   // d_e
  int style_dim = 64;   // d_y
  int hidden = 128;
  int patch_size = 16;  // per-instance logit patch
  int map_size = 16;    // output label map lattice
  double fill_logit = -10.0;
};

/// Pastes per-instance s x s logit patches (rows of `patches`, shape (M, s*s)) into
/// their box footprints on a map_size lattice, summing into channel category(i).
/// Channels that no instance covers at a pixel hold fill_logit.
template <class Scalar>
Var<Scalar> paste_instance_logits(const Var<Scalar>& patches, const LayoutBatch& batch, int categories,
                                  int patch_size, int map_size, Scalar fill_logit);

/// The layout-to-mask network: label embedding, style concatenation and the
/// per-instance decoder that produces the initial soft label map.
template <class Scalar>
class MaskGenerator {
 public:
  MaskGenerator(const MaskGeneratorConfig& config, ParameterStore<Scalar>& store, Rng& rng);

  /// One-hot(categories) times the embedding table, (M, d_e).
  Var<Scalar> embed_labels(const LayoutBatch& batch) const;
  /// Rows concat(embedding_i, z_i), (M, d_e + d_y).
  Var<Scalar> style_matrix(const LayoutBatch& batch, const Var<Scalar>& instance_codes) const;
  /// Initial soft label map (N, d_l, map_size, map_size).
  Var<Scalar> initial_map(const Var<Scalar>& style, const LayoutBatch& batch) const;

  const Var<Scalar>& embedding() const { return embedding_; }
  const MaskGeneratorConfig& config() const { return config_; }

 private:
  MaskGeneratorConfig config_;
  Var<Scalar> embedding_;
  Linear<Scalar> hidden_;
  Linear<Scalar> patch_;
};

/// Stacks bundle codes of a batch: image codes (N, d_z) and instance codes (M, d_y).
template <class Scalar>
std::pair<Var<Scalar>, Var<Scalar>> stack_latents(const std::vector<LatentBundle>& bundles);

}  // namespace dcl
