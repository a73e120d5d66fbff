#pragma once

#include <compare>
#include <string>
#include <vector>

#include "semirings/error.hpp"

namespace semirings {

// Set partition of {0, ..., n-1} in canonical labeling: labels[i] is the
// smallest element of i's block, so labels[labels[i]] == labels[i] and
// labels[i] <= i.
struct Partition {
  std::vector<ElementId> labels;

  Partition() = default;
  explicit Partition(std::vector<ElementId> raw_labels);

  int order() const { return static_cast<int>(labels.size()); }
  bool same_block(ElementId x, ElementId y) const {
    return labels[x] == labels[y];
  }

  static Partition identity(int n);
  static Partition full(int n);

  bool is_identity() const;
  bool is_full() const;
  int block_count() const;
  std::vector<std::vector<ElementId>> blocks() const;

  // True when every block of this partition lies inside a block of other.
  bool refines(const Partition& other) const;

  // Block-wise intersection.
  Partition meet(const Partition& other) const;

  // Space-separated label list, e.g. "0 1 1 3 0" for blocks {0,4},{1,2},{3}.
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.labels <=> b.labels;
  }
};

// All set partitions of {0, ..., n-1}, by restricted-growth strings; used by
// oracles and the congruence machinery's exhaustive fallbacks.
std::vector<Partition> all_partitions(int n);

}  // namespace semirings
