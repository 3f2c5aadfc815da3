// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dcl/dataset.hpp"
#include "dcl/discriminator.hpp"
#include "dcl/generator.hpp"
#include "dcl/inference_net.hpp"
#include "dcl/mask_generator.hpp"
#include "dcl/objective.hpp"

namespace dcl {

/// Network sizes. categories counts the background class.
struct ModelConfig {
  int image_size = 64;
  int categories = 7;
  int max_instances = kDefaultMaxInstances;
  int image_dim = 64;   // d_z
  int embed_dim = 64;   // d_e
  int style_dim = 64;   // d_y
  int mask_size = 16;
  int mask_hidden = 128;
  int gen_ch = 8;
  int inference_base = 32;
  int inference_depth = 3;
  int disc_ch = 16;
  std::uint64_t feature_seed = 0x5eed;
};

struct TrainConfig {
  double learning_rate = 1e-4;
  double beta1_gd = 0.0;  // G, H and D
  double beta2_gd = 0.999;
  double beta1_i = 0.9;
  double beta2_i = 0.999;
  int batch_size = 16;
  int epochs = 30;
  std::uint64_t seed = 0;
  int d_steps = 1;
  int g_steps = 1;
  long checkpoint_every = 1000;
  long eval_every = 0;   // 0: evaluate at the end only
  long max_steps = 0;    // 0: epochs * steps_per_epoch
  double lambda_rec = 1.0;
  double lambda_perc = 1.0;
  double lambda_kl = 1.0;
  double grad_clip = 0.0;  // 0: off
  bool kl_target_gradient = false;  // false: h^y is a constant target of the latent consensus
  std::string precision = "float";
  ModelConfig model;

  LossWeights loss_weights() const { return {lambda_rec, lambda_perc, lambda_kl}; }
};

/// Strict JSON parsing: unknown keys and non-positive sizes are ConfigError.
TrainConfig parse_train_config(const std::string& json_text);
TrainConfig load_train_config(const std::filesystem::path& path);
std::string train_config_json(const TrainConfig& config);
/// FNV-1a over the canonical JSON form.
std::uint64_t config_hash(const TrainConfig& config);

/// All four players, their optimizers and the fixed feature extractor.
template <class Scalar>
class DclModel {
 public:
  explicit DclModel(const TrainConfig& config);
  DclModel(const DclModel&) = delete;
  DclModel& operator=(const DclModel&) = delete;

  TrainConfig config;
  long step = 0;

 private:
  Rng init_rng_;

 public:
  ParameterStore<Scalar> g_store{"G"}, h_store{"H"}, i_store{"I"}, d_store{"D"};
  MaskGenerator<Scalar> mask;
  Generator<Scalar> gen;
  InferenceNet<Scalar> inf;
  Discriminator<Scalar> disc;
  FixedFeatureExtractor<Scalar> extractor;
  Adam<Scalar> opt_g, opt_h, opt_i, opt_d;

  /// Stores in checkpoint order, paired with their optimizers.
  std::vector<std::pair<ParameterStore<Scalar>*, Adam<Scalar>*>> players();
};

/// A batch of layouts with its latent draws.
template <class Scalar>
struct ConditionBatch {
  LayoutBatch layout;
  Var<Scalar> z;         // (N, d_z)
  Var<Scalar> z_obj;     // (M, d_y)
};

template <class Scalar>
ConditionBatch<Scalar> make_condition_batch(const std::vector<Layout>& layouts, const std::vector<LatentBundle>& bundles);

/// Latents of sample `index` at training step `step`.
std::uint64_t latent_seed(std::uint64_t seed, long step, int index);

template <class Scalar>
struct LatentPassOutputs {
  Var<Scalar> h_init, h_final, x_syn, h_syn;
};

template <class Scalar>
struct DataPassOutputs {
  Var<Scalar> h_real, x_recon;
};

/// layout -> H -> G -> I.
template <class Scalar>
LatentPassOutputs<Scalar> latent_consensus_pass(const DclModel<Scalar>& model, const ConditionBatch<Scalar>& cond);

/// real image -> I -> G. With detach_inferred the inferred map enters G as a constant.
template <class Scalar>
DataPassOutputs<Scalar> data_consensus_pass(const DclModel<Scalar>& model, const Var<Scalar>& x_real,
                                            const ConditionBatch<Scalar>& cond, bool detach_inferred = false);

/// Images of a sample list stacked to (N, 3, H, W).
template <class Scalar>
Tensor<Scalar> stack_images(const std::vector<const LayoutSample*>& samples);

/// One discriminator step and one joint G/H/I step on a batch. Returns logged values.
/// Throws NonFiniteLoss (message lists every component) when a loss is not finite.
template <class Scalar>
std::map<std::string, double> train_step(DclModel<Scalar>& model, const std::vector<const LayoutSample*>& batch);

struct TrainOptions {
  std::filesystem::path out_dir;
  bool write_checkpoints = true;
  bool quiet = false;
  /// Called after every step with the step's values (after the step counter advanced).
  std::function<void(long, const std::map<std::string, double>&)> on_step;
};

/// Runs the epoch loop from model.step to the configured end. The metrics log
/// (metrics.jsonl in out_dir) receives one record per step and one per evaluation.
/// Validation masks are read by evaluation only.
template <class Scalar>
void train(DclModel<Scalar>& model, const std::vector<LayoutSample>& train_set,
           const std::vector<LayoutSample>* val_set, const TrainOptions& options);

long steps_per_epoch(const TrainConfig& config, std::size_t dataset_size);
long total_steps(const TrainConfig& config, std::size_t dataset_size);

template <class Scalar>
void save_checkpoint(const DclModel<Scalar>& model, const std::filesystem::path& path);

/// Reads only the configuration stored in a checkpoint header.
TrainConfig read_checkpoint_config(const std::filesystem::path& path);

template <class Scalar>
std::unique_ptr<DclModel<Scalar>> load_checkpoint(const std::filesystem::path& path);

}  // namespace dcl
