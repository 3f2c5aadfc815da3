// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

#include "dcl/errors.hpp"

namespace dcl {

/// Ordered category names; index 0 is reserved for the background class.
class CategorySet {
 public:
  explicit CategorySet(std::vector<std::string> names, int background_id = 0);

  int count() const { return static_cast<int>(names_.size()); }
  int background_id() const { return background_id_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int id) const { return names_.at(id); }
  bool valid(int id) const { return id >= 0 && id < count(); }

 private:
  std::vector<std::string> names_;
  int background_id_;
};

struct Lattice {
  int height = 0;
  int width = 0;

  int pixels() const { return height * width; }
  bool operator==(const Lattice&) const = default;
};

/// Axis-aligned box in normalized, half-open coordinates [x0, x1) x [y0, y1).
struct Box {
  double x0 = 0, y0 = 0, x1 = 1, y1 = 1;

  bool operator==(const Box&) const = default;
  static Box full() { return {0.0, 0.0, 1.0, 1.0}; }
};

struct LabeledBox {
  int category = 0;
  Box box;

  bool operator==(const LabeledBox&) const = default;
};

/// The condition of the generative model: ordered labeled boxes on a lattice.
/// After validate_layout the last box is the full-lattice background instance.
struct Layout {
  std::vector<LabeledBox> boxes;
  Lattice lattice;

  bool operator==(const Layout&) const = default;
  /// Number of boxes that are not the trailing implicit background instance.
  int foreground_count(int background_id = 0) const;
};

using BinaryMask = Eigen::Array<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// RGB image, channel-major (3, H, W), values in [-1, 1].
struct Image {
  int height = 0;
  int width = 0;
  Eigen::ArrayXf pixels;

  Image() = default;
  Image(int h, int w) : height(h), width(w), pixels(Eigen::ArrayXf::Zero(3 * h * w)) {}

  float& at(int c, int y, int x) { return pixels[(c * height + y) * width + x]; }
  float at(int c, int y, int x) const { return pixels[(c * height + y) * width + x]; }
  Lattice lattice() const { return {height, width}; }
  void clamp() { pixels = pixels.max(-1.0f).min(1.0f); }
};

/// Per-pixel category indices. Evaluation ground truth only.
struct HardLabelMap {
  int height = 0;
  int width = 0;
  Eigen::ArrayXi labels;

  HardLabelMap() = default;
  HardLabelMap(int h, int w, int fill = 0) : height(h), width(w), labels(Eigen::ArrayXi::Constant(h * w, fill)) {}

  int& at(int y, int x) { return labels[y * width + x]; }
  int at(int y, int x) const { return labels[y * width + x]; }
};

constexpr int kDefaultMaxInstances = 8;

/// Checks boxes and categories and appends the full-lattice background instance
/// when it is not already the last box. Idempotent.
Layout validate_layout(const Layout& layout, const CategorySet& categories, int max_instances = kDefaultMaxInstances);

/// Pixel (r, c) is set iff its center lies in the half-open box.
/// Throws EmptyRaster when no pixel center is covered.
BinaryMask rasterize_box(const Box& box, const Lattice& lattice);
/// Same as rasterize_box, but an uncovered box yields an all-zero mask.
BinaryMask rasterize_box_or_empty(const Box& box, const Lattice& lattice);

/// Half-open pixel index ranges [row_begin, row_end) x [col_begin, col_end) covered by a box.
struct PixelSpan {
  int row_begin, row_end, col_begin, col_end;
  bool empty() const { return row_begin >= row_end || col_begin >= col_end; }
};
PixelSpan pixel_span(const Box& box, const Lattice& lattice);

}  // namespace dcl
