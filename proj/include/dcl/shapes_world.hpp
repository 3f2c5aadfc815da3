// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "dcl/layout.hpp"

namespace dcl {

/// Procedural scenes of flat-colored shapes on a flat background. Every
/// foreground class has its own primitive and base color.
struct ShapesConfig {
  int size = 64;
  int classes = 6;
  int min_instances = 1;
  int max_instances = 3;
  double min_extent = 0.25;      // box side as a fraction of the lattice
  double max_extent = 0.5;
  double position_jitter = 0.35; // box center offset from the lattice center
  double color_jitter = 0.15;    // per-instance uniform offset per channel
};

enum class ShapePrimitive { square, disc, triangle, diamond, cross, hexagon };

/// Primitive used for foreground category c >= 1.
ShapePrimitive primitive_for(int category);
/// Whether the point (u, v) in [-1, 1]^2 box coordinates belongs to the primitive.
bool primitive_contains(ShapePrimitive p, double u, double v);
/// Base RGB color in [-1, 1] of a category (background at index 0).
Eigen::Array3f base_color(int category, int classes);

CategorySet shapes_categories(int classes);

struct ShapesSample {
  Image image;
  Layout layout;  // foreground boxes only, back-to-front
  HardLabelMap labels;
};

/// Deterministic in (seed, config).
ShapesSample generate_shapes_sample(std::uint64_t seed, const ShapesConfig& config);

/// Derives a per-item seed from a base seed and an index.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace dcl
