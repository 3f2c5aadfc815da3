// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "dcl/layout.hpp"
#include "dcl/shapes_world.hpp"

namespace dcl {

// Netpbm image files: binary PPM (P6) for RGB images, binary PGM (P5) for label maps.
void write_ppm(const std::filesystem::path& path, const Image& image);
Image read_ppm(const std::filesystem::path& path);
void write_pgm(const std::filesystem::path& path, const HardLabelMap& labels);
HardLabelMap read_pgm(const std::filesystem::path& path);

/// One manifest record: image, layout and, when the dataset ships masks, the ground-truth labels.
struct LayoutSample {
  Image image;
  Layout layout;  // validated, background instance appended
  std::optional<HardLabelMap> labels;
};

/// Streams samples described by a JSON-lines manifest
/// ({"image": ..., "boxes": [[category, x0, y0, x1, y1], ...], "mask": optional}).
/// `path` is either the manifest file or a directory holding manifest.jsonl.
class LayoutDatasetReader {
 public:
  explicit LayoutDatasetReader(const std::filesystem::path& path, int max_instances = kDefaultMaxInstances);

  const CategorySet& categories() const { return categories_; }
  /// Next sample, or nullopt at the end of the manifest.
  std::optional<LayoutSample> next();

 private:
  std::filesystem::path root_;
  std::ifstream manifest_;
  CategorySet categories_;
  int max_instances_;
  long line_no_ = 0;
};

LayoutDatasetReader load_layout_dataset(const std::filesystem::path& path, int max_instances = kDefaultMaxInstances);

/// Reads a whole dataset into memory.
std::vector<LayoutSample> read_all(LayoutDatasetReader& reader);

/// Writes images/, masks/, manifest.jsonl and categories.json under dir.
void write_layout_dataset(const std::filesystem::path& dir, const std::vector<ShapesSample>& samples,
                          const CategorySet& categories);

/// `count` shapes-world samples; sample i uses seed mix_seed(seed, i).
std::vector<ShapesSample> generate_shapes_dataset(int count, std::uint64_t seed, const ShapesConfig& config);

/// In-memory conversion with layout validation.
std::vector<LayoutSample> to_layout_samples(const std::vector<ShapesSample>& samples, const CategorySet& categories,
                                            int max_instances = kDefaultMaxInstances);

/// Permutation of [0, n) determined by (seed, epoch).
std::vector<int> epoch_order(int n, std::uint64_t seed, int epoch);

}  // namespace dcl
