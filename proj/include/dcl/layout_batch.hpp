// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "dcl/layout.hpp"

namespace dcl {

struct InstanceRef {
  int sample = 0;
  int category = 0;
  Box box;
  bool background = false;  // the implicit full-lattice instance
};

/// Instances of a batch of validated layouts, stacked sample-major. Row i of any
/// per-instance matrix (style matrix, instance affine) refers to instances[i].
struct LayoutBatch {
  std::vector<InstanceRef> instances;
  std::vector<int> sample_offset;  // size batch + 1
  Lattice lattice;

  static LayoutBatch from(const std::vector<Layout>& layouts, int background_id = 0);

  int batch_size() const { return static_cast<int>(sample_offset.size()) - 1; }
  int instance_count() const { return static_cast<int>(instances.size()); }
  std::vector<int> categories() const;
  /// Rows of foreground instances, in batch order.
  std::vector<int> object_rows() const;
};

}  // namespace dcl
