#include "semirings/partition.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace semirings {

namespace {

// Rewrites arbitrary block ids so each label is the block's smallest element.
std::vector<ElementId> canonicalize(const std::vector<ElementId>& raw) {
  const int n = static_cast<int>(raw.size());
  std::map<ElementId, ElementId> first_seen;
  std::vector<ElementId> labels(n);
  for (int i = 0; i < n; ++i) {
    auto [it, inserted] = first_seen.try_emplace(raw[i], i);
    labels[i] = it->second;
  }
  return labels;
}

}  // namespace

Partition::Partition(std::vector<ElementId> raw_labels)
    : labels(canonicalize(raw_labels)) {}

Partition Partition::identity(int n) {
  Partition p;
  p.labels.resize(n);
  for (int i = 0; i < n; ++i) p.labels[i] = i;
  return p;
}

Partition Partition::full(int n) {
  Partition p;
  p.labels.assign(n, 0);
  return p;
}

bool Partition::is_identity() const {
  for (int i = 0; i < order(); ++i)
    if (labels[i] != i) return false;
  return true;
}

bool Partition::is_full() const {
  return std::all_of(labels.begin(), labels.end(),
                     [](ElementId l) { return l == 0; });
}

int Partition::block_count() const {
  int count = 0;
  for (int i = 0; i < order(); ++i)
    if (labels[i] == i) ++count;
  return count;
}

std::vector<std::vector<ElementId>> Partition::blocks() const {
  std::vector<std::vector<ElementId>> result;
  std::vector<int> index_of(order(), -1);
  for (int i = 0; i < order(); ++i) {
    if (index_of[labels[i]] < 0) {
      index_of[labels[i]] = static_cast<int>(result.size());
      result.emplace_back();
    }
    result[index_of[labels[i]]].push_back(i);
  }
  return result;
}

bool Partition::refines(const Partition& other) const {
  for (int i = 0; i < order(); ++i)
    if (other.labels[i] != other.labels[labels[i]]) return false;
  return true;
}

Partition Partition::meet(const Partition& other) const {
  const int n = order();
  std::map<std::pair<ElementId, ElementId>, ElementId> first_seen;
  std::vector<ElementId> raw(n);
  for (int i = 0; i < n; ++i) {
    auto [it, inserted] =
        first_seen.try_emplace({labels[i], other.labels[i]}, i);
    raw[i] = it->second;
  }
  Partition p;
  p.labels = std::move(raw);  // already smallest-element labels
  return p;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  for (int i = 0; i < order(); ++i) {
    if (i) out << ' ';
    out << labels[i];
  }
  return out.str();
}

std::vector<Partition> all_partitions(int n) {
  // Restricted-growth strings: rgs[i] <= 1 + max(rgs[0..i-1]).
  std::vector<Partition> result;
  std::vector<ElementId> rgs(n, 0);
  auto emit = [&] {
    Partition p;
    p.labels = canonicalize(rgs);
    result.push_back(std::move(p));
  };
  // Iterative odometer with per-position caps.
  if (n <= 0) return result;
  while (true) {
    emit();
    int i = n - 1;
    for (; i > 0; --i) {
      int cap = 0;
      for (int j = 0; j < i; ++j) cap = std::max(cap, rgs[j] + 1);
      if (rgs[i] < cap) {
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
    }
    if (i == 0) break;
  }
  return result;
}

}  // namespace semirings
