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

#ifndef PMI_MATROID_HPP
#define PMI_MATROID_HPP

#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace pmi {

struct UniformKind {
  int k = 0;
  friend bool operator==(const UniformKind&, const UniformKind&) = default;
};

struct PartitionKind {
  std::vector<std::vector<int>> parts;
  std::vector<int> capacities;
  friend bool operator==(const PartitionKind&, const PartitionKind&) = default;
};

struct GraphicKind {
  int nodes = 0;
  std::vector<std::pair<int, int>> edges;  // element i joins edges[i].first and edges[i].second
  friend bool operator==(const GraphicKind&, const GraphicKind&) = default;
};

/// A matroid on the ground set {0, ..., m-1}. Construction validates the
/// kind-specific data and throws InputError on violations.
class Matroid {
 public:
  using Kind = std::variant<UniformKind, PartitionKind, GraphicKind>;

  static Matroid uniform(int k, int ground_size);
  static Matroid partition(std::vector<std::vector<int>> parts, std::vector<int> capacities);
  static Matroid graphic(int nodes, std::vector<std::pair<int, int>> edges);

  int ground_size() const { return ground_size_; }
  const Kind& kind() const { return kind_; }
  const PartitionKind* as_partition() const { return std::get_if<PartitionKind>(&kind_); }
  const GraphicKind* as_graphic() const { return std::get_if<GraphicKind>(&kind_); }
  const UniformKind* as_uniform() const { return std::get_if<UniformKind>(&kind_); }

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  Matroid(Kind kind, int ground_size) : kind_(std::move(kind)), ground_size_(ground_size) {}

  Kind kind_;
  int ground_size_ = 0;
};

/// Grows an independent set one element at a time.
class IndependenceBuilder {
 public:
  explicit IndependenceBuilder(const Matroid& matroid);

  /// Adds `element` if the set stays independent; reports whether it did.
  bool try_add(int element);
  int size() const { return size_; }

 private:
  int find(int node);

  const Matroid* matroid_;
  std::vector<int> counts_;   // per part (partition)
  std::vector<int> part_of_;  // element -> part (partition)
  std::vector<int> parent_;   // union-find forest over nodes (graphic)
  int size_ = 0;
};

/// Throws InputError on out-of-range or repeated indices.
bool is_independent(const Matroid& matroid, std::span<const int> subset);

/// Cardinality of every basis.
int rank(const Matroid& matroid);

/// Rank of the restriction to `subset`.
int rank_of(const Matroid& matroid, std::span<const int> subset);

}  // namespace pmi

#endif  // PMI_MATROID_HPP
