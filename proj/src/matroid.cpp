// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pmi/matroid.hpp"

#include <numeric>
#include <string>

#include "pmi/errors.hpp"

namespace pmi {

Matroid Matroid::uniform(int k, int ground_size) {
  if (ground_size < 0 || k < 0 || k > ground_size) {
    throw InputError("uniform matroid needs 0 <= k <= m");
  }
  return Matroid(UniformKind{k}, ground_size);
}

Matroid Matroid::partition(std::vector<std::vector<int>> parts, std::vector<int> capacities) {
  if (parts.size() != capacities.size()) {
    throw InputError("partition matroid needs one capacity per part");
  }
  int m = 0;
  for (const auto& part : parts) m += static_cast<int>(part.size());
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const int size = static_cast<int>(parts[i].size());
    if (capacities[i] < 1 || capacities[i] > size) {
      throw InputError("partition capacity " + std::to_string(i) + " must lie in [1, |part|]");
    }
    for (int e : parts[i]) {
      if (e < 0 || e >= m || seen[static_cast<std::size_t>(e)]) {
        throw InputError("partition parts must be disjoint and cover 0..m-1");
      }
      seen[static_cast<std::size_t>(e)] = 1;
    }
  }
  return Matroid(PartitionKind{std::move(parts), std::move(capacities)}, m);
}

Matroid Matroid::graphic(int nodes, std::vector<std::pair<int, int>> edges) {
  if (nodes < 1) throw InputError("graphic matroid needs at least one node");
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= nodes || v < 0 || v >= nodes) {
      throw InputError("edge endpoint out of range");
    }
  }
  const int m = static_cast<int>(edges.size());
  return Matroid(GraphicKind{nodes, std::move(edges)}, m);
}

IndependenceBuilder::IndependenceBuilder(const Matroid& matroid) : matroid_(&matroid) {
  if (const auto* part = matroid.as_partition()) {
    counts_.assign(part->parts.size(), 0);
    part_of_.assign(static_cast<std::size_t>(matroid.ground_size()), 0);
    for (std::size_t i = 0; i < part->parts.size(); ++i) {
      for (int e : part->parts[i]) part_of_[static_cast<std::size_t>(e)] = static_cast<int>(i);
    }
  } else if (const auto* graph = matroid.as_graphic()) {
    parent_.resize(static_cast<std::size_t>(graph->nodes));
    std::iota(parent_.begin(), parent_.end(), 0);
  }
}

int IndependenceBuilder::find(int node) {
  auto n = static_cast<std::size_t>(node);
  while (parent_[n] != static_cast<int>(n)) {
    parent_[n] = parent_[static_cast<std::size_t>(parent_[n])];
    n = static_cast<std::size_t>(parent_[n]);
  }
  return static_cast<int>(n);
}

bool IndependenceBuilder::try_add(int element) {
  if (element < 0 || element >= matroid_->ground_size()) {
    throw InputError("element index " + std::to_string(element) + " out of range");
  }
  bool ok = false;
  if (const auto* uni = matroid_->as_uniform()) {
    ok = size_ < uni->k;
  } else if (const auto* part = matroid_->as_partition()) {
    const auto i = static_cast<std::size_t>(part_of_[static_cast<std::size_t>(element)]);
    ok = counts_[i] < part->capacities[i];
    if (ok) ++counts_[i];
  } else {
    const auto& [u, v] = matroid_->as_graphic()->edges[static_cast<std::size_t>(element)];
    const int ru = find(u);
    const int rv = find(v);
    ok = ru != rv;
    if (ok) parent_[static_cast<std::size_t>(ru)] = rv;
  }
  if (ok) ++size_;
  return ok;
}

bool is_independent(const Matroid& matroid, std::span<const int> subset) {
  std::vector<char> seen(static_cast<std::size_t>(matroid.ground_size()), 0);
  for (int e : subset) {
    if (e < 0 || e >= matroid.ground_size()) {
      throw InputError("element index " + std::to_string(e) + " out of range");
    }
    if (seen[static_cast<std::size_t>(e)]) throw InputError("repeated element in subset");
    seen[static_cast<std::size_t>(e)] = 1;
  }
  IndependenceBuilder builder(matroid);
  for (int e : subset) {
    if (!builder.try_add(e)) return false;
  }
  return true;
}

int rank_of(const Matroid& matroid, std::span<const int> subset) {
  IndependenceBuilder builder(matroid);
  for (int e : subset) builder.try_add(e);
  return builder.size();
}

int rank(const Matroid& matroid) {
  std::vector<int> all(static_cast<std::size_t>(matroid.ground_size()));
  std::iota(all.begin(), all.end(), 0);
  return rank_of(matroid, all);
}

}  // namespace pmi
