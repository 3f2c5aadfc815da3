// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <filesystem>
#include <vector>

#include "dcl/dataset.hpp"
#include "dcl/inference_net.hpp"
#include "dcl/objective.hpp"

namespace dcl {

/// counts(g, p): pixels with ground truth g predicted as p.
struct ConfusionMatrix {
  Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> counts;

  explicit ConfusionMatrix(int categories) : counts(decltype(counts)::Zero(categories, categories)) {}
  long long total() const { return counts.sum(); }
  ConfusionMatrix& operator+=(const ConfusionMatrix& o);
};

/// Throws ShapeMismatch when the maps differ in size.
void accumulate(ConfusionMatrix& cm, const HardLabelMap& gt, const HardLabelMap& pred);

struct SegmentationMetrics {
  double class_acc = 0;
  double pixel_acc = 0;
  double mean_iou = 0;
  double fw_iou = 0;
  std::vector<double> class_iou;  // NaN for classes absent from both maps
};

/// Classes absent from the ground truth leave class_acc; classes absent from both maps
/// leave mean_iou. Throws EmptyMatrix when nothing was counted.
SegmentationMetrics metrics(const ConfusionMatrix& cm);

/// Confusion matrix of I's hard predictions over the labeled samples of a set.
template <class Scalar>
ConfusionMatrix evaluate_segmentation(const InferenceNet<Scalar>& net, const std::vector<LayoutSample>& samples,
                                      int batch_size = 32);

/// ||mu_a - mu_b||^2 + tr(S_a + S_b - 2 (S_a S_b)^(1/2)) over rows of two feature matrices.
double frechet_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// Fixed-extractor Frechet distance between two image sets (a proxy, not FID).
template <class Scalar>
double fidelity_proxy(const FixedFeatureExtractor<Scalar>& extractor, const std::vector<Image>& a,
                      const std::vector<Image>& b);

/// Mean pairwise perceptual_l1 over a set of images of one layout (a proxy, not LPIPS).
template <class Scalar>
double diversity_proxy(const FixedFeatureExtractor<Scalar>& extractor, const std::vector<Image>& images);

template <class Scalar>
Tensor<Scalar> images_to_tensor(const std::vector<Image>& images);
template <class Scalar>
std::vector<Image> tensor_to_images(const Tensor<Scalar>& t);

/// Colors a soft or hard label map for panels: category c gets base_color(c).
Image colorize_labels(const HardLabelMap& labels, int categories);
/// Draws box outlines of a layout in category colors on a background canvas.
Image draw_layout(const Layout& layout, int categories);
/// Horizontal concatenation with a 2-pixel separator.
Image hconcat(const std::vector<Image>& panels);
Image vconcat(const std::vector<Image>& rows);

}  // namespace dcl
