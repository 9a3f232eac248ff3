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

#ifndef PMI_VERIFY_HPP
#define PMI_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pmi/framework.hpp"

namespace pmi {

struct ExactValue {
  Rational value;
  Strategy strategy;
};

/// y(λ) with a maximizing strategy (lexicographically smallest on ties).
///
/// Deliberately shares no code with the oracles: strategies are generated by
/// its own recursion and each y_F comes from reverse deletion (drop the
/// heaviest element whenever the rank survives) instead of the greedy pass.
ExactValue exact_value(const Instance& instance, const Point& lambda);

/// y_F(λ) for one strategy, by the same reverse deletion as exact_value().
Rational strategy_value(const Instance& instance, const Strategy& strategy, const Point& lambda);

struct Violation {
  Point lambda;
  Rational certified;
  Rational exact;
};

struct InvariantResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct VerificationReport {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t points_checked = 0;
  Rational required_ratio;
  std::optional<Rational> min_ratio;  // unset when no point had y > 0
  std::vector<Violation> violations;
  std::vector<Point> coverage_failures;
  std::vector<InvariantResult> invariants;

  /// No violations, no coverage failures and min_ratio >= required_ratio.
  bool passed() const;
};

struct CertifyOptions {
  std::size_t samples = 500;
  std::uint64_t seed = 0;
  /// Also check every vertex of the arrangement cut out by all pairwise
  /// differences of the C(m, ell) value forms per cell. Both sides of the
  /// guarantee are linear between those vertices, so this is a complete
  /// check rather than a sampled one.
  bool exhaustive = false;
  bool check_invariants = true;
};

/// Compares the certified value against exact_value at random points of the
/// parameter polytope, at every cell vertex and anchor, and at the points
/// where two stored value forms of a cell cross. The certified value at a
/// point is the query answer capped by what the returned strategy really
/// achieves there. Throws UsageError when the result was computed for a
/// different instance.
VerificationReport certify(const ApproximationResult& result, const Instance& instance,
                           const CertifyOptions& options = {});

/// Rational point drawn uniformly from the bounding box of `poly` on a grid
/// of step 1/2^16 per unit box length, rejected until it lies in `poly`.
std::optional<Point> sample_point(const Polytope<Rational>& poly, std::mt19937_64& rng,
                                  int max_attempts = 10000);

/// Every vertex (λ, z) of the final lower-bound polyhedron has z equal to
/// the largest stored value form at λ and fails the refinement test.
InvariantResult check_vertex_dominance(const Instance& instance, const CellSolution& solution,
                                       const OracleKind& oracle);

/// No two stored strategies F, F' satisfy (1 - eps) γ(F') <= γ(F) <= γ(F').
InvariantResult check_grid_once(const Instance& instance, const CellSolution& solution);

/// Stored value forms never exceed y at the cell vertices and the anchor.
InvariantResult check_lower_bounds(const Instance& instance, const CellSolution& solution);

/// The interdicted basis of each stored strategy is the same at `samples`
/// random points of the cell as at the anchor.
InvariantResult check_basis_stability(const Instance& instance, const CellSolution& solution,
                                      std::size_t samples, std::mt19937_64& rng);

/// On the cell, y equals the upper envelope of the y_F forms taken at the
/// anchor; checked at random points and at pairwise form crossings.
InvariantResult check_cell_envelope(const Instance& instance, const Cell& cell, std::size_t samples,
                                    std::mt19937_64& rng);

/// Points where two forms cross inside the polytope: vertices of the split
/// pieces that lie on the hyperplane form_i = form_j.
std::vector<Point> crossing_points(const Polytope<Rational>& poly,
                                   const std::vector<RationalForm>& forms);

}  // namespace pmi

#endif  // PMI_VERIFY_HPP
