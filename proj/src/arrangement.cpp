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

#include "pmi/arrangement.hpp"

#include <set>

namespace pmi {

std::vector<Hyperplane<Rational>> separating_hyperplanes(const Instance& instance) {
  std::vector<Hyperplane<Rational>> out;
  std::set<RationalForm, AffineFormLess<Rational>> seen;
  const auto& w = instance.weights;
  for (std::size_t e = 0; e < w.size(); ++e) {
    for (std::size_t f = e + 1; f < w.size(); ++f) {
      const RationalForm diff = w[e] - w[f];
      if (diff.has_zero_gradient()) continue;
      RationalForm normalized = normalize_hyperplane(diff);
      if (seen.insert(normalized).second) out.push_back({std::move(normalized)});
    }
  }
  return out;
}

std::vector<Cell> build_cells(const Instance& instance,
                              std::span<const Hyperplane<Rational>> hyperplanes) {
  const auto region = parameter_polytope(instance);
  auto pieces = arrangement_cells<Rational>(region, hyperplanes);
  std::vector<Cell> cells;
  cells.reserve(pieces.size());
  for (auto& piece : pieces) {
    Cell cell;
    cell.interior_point = *piece.interior();
    cell.sign_vector.reserve(hyperplanes.size());
    for (const auto& h : hyperplanes) {
      cell.sign_vector.push_back(h.form(cell.interior_point) > 0 ? 1 : -1);
    }
    cell.polytope = std::move(piece);
    cells.push_back(std::move(cell));
  }
  return cells;
}

std::vector<Cell> build_cells(const Instance& instance) {
  const auto hyperplanes = separating_hyperplanes(instance);
  return build_cells(instance, hyperplanes);
}

}  // namespace pmi
