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

#ifndef PMI_CELL_APPROX_HPP
#define PMI_CELL_APPROX_HPP

#include <cstddef>
#include <vector>

#include "pmi/arrangement.hpp"
#include "pmi/oracles.hpp"

namespace pmi {

/// A strategy F kept for a cell, with λ -> w(B^F_{λ0}, λ) as an affine form.
struct StrategyForm {
  Strategy strategy;
  RationalForm value_form;
};

/// Output of the outer-approximation loop on one cell.
struct CellSolution {
  Cell cell;
  Point anchor;  // λ0
  std::vector<StrategyForm> strategies;
  Rational epsilon;
  Rational beta;
  std::size_t oracle_calls = 0;
  std::size_t iterations = 0;  // vertex scans, including the final one
};

/// { (λ, z) : λ in cell }, with z as the designated upward axis. Carries no
/// vertex cache; it has none until a value constraint bounds z from below.
Polytope<Rational> lift_cell(const Cell& cell);

/// The half-space { (λ, z) : value_form(λ) <= z } written as a constraint.
RationalForm epigraph_constraint(const RationalForm& value_form);

/// Appends F with the value form of its interdicted basis at the anchor and
/// cuts `lifted` with the matching epigraph constraint.
void add_strategy(const Instance& instance, CellSolution& state, Polytope<Rational>& lifted,
                  const Strategy& strategy);

/// Outer approximation of the upper envelope of the y_F on one cell.
///
/// Starting from the oracle answer at the cell's interior point, the loop
/// scans the vertices of the lower-bound polyhedron in lexicographic order
/// and queries the oracle at each. A strategy F whose (1 - eps)-scaled value
/// exceeds the vertex height is added and the scan restarts. Vertices that
/// were cleared earlier and survive the cut are not queried again.
CellSolution approximate_cell(const Instance& instance, const Cell& cell, const Rational& epsilon,
                              const OracleKind& oracle);

/// The lower-bound polyhedron of a finished solution, with vertex cache.
Polytope<Rational> lower_bound_polyhedron(const CellSolution& solution);

/// Coefficient vector (Σ b_1, ..., Σ b_p, Σ a) of the interdicted basis at
/// the anchor.
Point gamma(const Instance& instance, const Strategy& strategy, const Point& anchor);

}  // namespace pmi

#endif  // PMI_CELL_APPROX_HPP
