// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dcl/evaluation.hpp"
#include "dcl/trainer.hpp"

namespace dcl {

/// Images synthesized from layouts with latents drawn from mix_seed(seed, i), generator in
/// evaluation mode.
template <class Scalar>
std::vector<Image> synthesize_images(DclModel<Scalar>& model, const std::vector<Layout>& layouts, std::uint64_t seed,
                                     int batch_size = 32);

/// Mean pairwise perceptual distance of n_samples syntheses of one layout.
template <class Scalar>
double layout_diversity(DclModel<Scalar>& model, const Layout& layout, int n_samples, std::uint64_t seed);

/// One row per sample: layout boxes, refined map h^y, x_syn, x_real, inferred map of x_real, x_recon.
template <class Scalar>
std::vector<Image> render_panels(DclModel<Scalar>& model, const std::vector<LayoutSample>& samples, std::uint64_t seed);

/// Writes panel_NNN.ppm per sample, grid.ppm and summary.json into out_dir.
template <class Scalar>
void emit_samples(DclModel<Scalar>& model, const std::vector<LayoutSample>& samples, const std::filesystem::path& out_dir,
                  std::uint64_t seed);

struct SynthesisSanity {
  double fidelity_syn = 0;    // proxy(real, synthesized from the same layouts)
  double fidelity_noise = 0;  // proxy(real, real + N(0, noise_sigma^2), clamped)
  double diversity = 0;       // mean layout_diversity over the first layouts of the set
  double noise_sigma = 0.5;
};

template <class Scalar>
SynthesisSanity synthesis_sanity(DclModel<Scalar>& model, const std::vector<LayoutSample>& samples, std::uint64_t seed,
                                 int diversity_layouts = 8, int diversity_samples = 4);

/// Metrics of a predictor that draws every pixel label uniformly at random.
SegmentationMetrics uniform_random_baseline(const std::vector<LayoutSample>& samples, int categories,
                                            std::uint64_t seed);

/// The fully supervised control: the same inference architecture, optimizer settings,
/// batch size and epochs as I, trained with cross-entropy on ground-truth masks.
template <class Scalar>
SegmentationMetrics train_supervised_twin(const TrainConfig& config, const std::vector<LayoutSample>& train_set,
                                          const std::vector<LayoutSample>& val_set,
                                          const std::function<void(long, double)>& on_step = {});

struct ExperimentConfig {
  TrainConfig train;
  ShapesConfig shapes;
  int train_count = 5000;
  int val_count = 500;
  std::uint64_t data_seed = 20240;
  std::vector<std::uint64_t> seeds{0, 1, 2};
  bool supervised_twin = true;
  double min_mean_iou = 0.50;
  double min_pixel_acc = 0.80;
  std::filesystem::path out_dir = "results/e2e";
  bool quiet = false;
};

nlohmann::json segmentation_json(const SegmentationMetrics& m);

/// Trains one weakly supervised model (and its supervised twin) per seed and writes
/// e2e_report.json into out_dir after every finished seed. Finished seeds are reused and an
/// interrupted seed resumes from its checkpoint.
nlohmann::json run_experiment(const ExperimentConfig& config);

}  // namespace dcl
