// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dcl/discriminator.hpp"
#include "dcl/nn.hpp"

namespace dcl {

/// Frozen random multi-scale convolutional features at strides 1, 2 and 4.
template <class Scalar>
class FixedFeatureExtractor {
 public:
  explicit FixedFeatureExtractor(std::uint64_t seed = 0x5eed);

  std::vector<Var<Scalar>> operator()(const Var<Scalar>& images) const;
  /// Spatially averaged features of every scale, concatenated: (N, total channels).
  Eigen::MatrixXd pooled(const Tensor<Scalar>& images) const;

  const ParameterStore<Scalar>& store() const { return store_; }

 private:
  ParameterStore<Scalar> store_;
  std::vector<Conv2d<Scalar>> convs_;
};

/// Mean absolute difference over pixels and channels.
template <class Scalar>
Var<Scalar> recon_l1(const Var<Scalar>& real, const Var<Scalar>& recon);

/// Sum over scales of the mean absolute feature difference.
template <class Scalar>
Var<Scalar> perceptual_l1(const FixedFeatureExtractor<Scalar>& extractor, const Var<Scalar>& a, const Var<Scalar>& b);

inline constexpr double kLogEps = 1e-8;

/// Pixel-averaged KL(target || pred) over the channel axis.
template <class Scalar>
Var<Scalar> mean_kl(const Var<Scalar>& target, const Var<Scalar>& pred);

enum class Realness { real, fake };

/// Hinge margin loss. Per image: (image term + mean of its object terms) / 2, averaged over images.
template <class Scalar>
Var<Scalar> hinge_d(const DiscriminatorScores<Scalar>& scores, Realness realness);

/// Generator companion: -(p_img + mean p_obj) / 2 per image, averaged over images.
template <class Scalar>
Var<Scalar> adv_g(const DiscriminatorScores<Scalar>& scores);

struct LossWeights {
  double recon = 1.0;
  double perceptual = 1.0;
  double kl = 1.0;
};

/// Everything one batch of both consensus chains produced. Scores are those used for the
/// reported losses: real scores enter loss_D only, fake scores enter both players' losses.
template <class Scalar>
struct BatchOutputs {
  Var<Scalar> x_real, x_syn, x_recon;
  Var<Scalar> h_y, h_syn, h_real;
  const DiscriminatorScores<Scalar>* scores_real = nullptr;
  const DiscriminatorScores<Scalar>* scores_syn = nullptr;
  const DiscriminatorScores<Scalar>* scores_recon = nullptr;
};

template <class Scalar>
struct PlayerLosses {
  Var<Scalar> loss_g, loss_d, loss_i;
  std::map<std::string, Var<Scalar>> components;

  /// Scalar values of the three player losses and every component.
  std::map<std::string, double> values() const;
};

/// Sum of the discriminator's three hinge terms.
template <class Scalar>
Var<Scalar> discriminator_loss(const DiscriminatorScores<Scalar>& real, const DiscriminatorScores<Scalar>& recon,
                               const DiscriminatorScores<Scalar>& syn);

/// Throws MissingBranch when a chain output is absent.
template <class Scalar>
PlayerLosses<Scalar> assemble_losses(const BatchOutputs<Scalar>& outputs, const FixedFeatureExtractor<Scalar>& extractor,
                                     const LossWeights& weights = {});

}  // namespace dcl
