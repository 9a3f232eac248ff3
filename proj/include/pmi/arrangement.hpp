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

#ifndef PMI_ARRANGEMENT_HPP
#define PMI_ARRANGEMENT_HPP

#include <span>
#include <vector>

#include "pmi/geometry.hpp"
#include "pmi/instance.hpp"

namespace pmi {

/// A closed, full-dimensional cell of the separating-hyperplane arrangement
/// restricted to the parameter polytope.
struct Cell {
  Polytope<Rational> polytope;
  Point interior_point;
  /// Sign (+1 / -1) of each separating hyperplane form at the interior point.
  std::vector<int> sign_vector;
};

/// One hyperplane { w(e, .) = w(f, .) } per pair of elements whose weight
/// forms differ in the gradient, normalized and deduplicated, in pair order.
std::vector<Hyperplane<Rational>> separating_hyperplanes(const Instance& instance);

/// Cells of the arrangement of `hyperplanes` inside the parameter polytope,
/// ordered lexicographically by interior point.
std::vector<Cell> build_cells(const Instance& instance,
                              std::span<const Hyperplane<Rational>> hyperplanes);

std::vector<Cell> build_cells(const Instance& instance);

}  // namespace pmi

#endif  // PMI_ARRANGEMENT_HPP
