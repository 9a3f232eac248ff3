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

#ifndef PMI_FRAMEWORK_HPP
#define PMI_FRAMEWORK_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "pmi/cell_approx.hpp"
#include "pmi/instance.hpp"

namespace pmi {

struct ResultMetadata {
  std::size_t hyperplanes = 0;
  std::size_t cells = 0;
  std::size_t oracle_calls = 0;
  std::size_t distinct_strategies = 0;
  double wall_seconds = 0;  // not serialized

  friend bool operator==(const ResultMetadata& a, const ResultMetadata& b) {
    return a.hyperplanes == b.hyperplanes && a.cells == b.cells &&
           a.oracle_calls == b.oracle_calls && a.distinct_strategies == b.distinct_strategies;
  }
};

struct ApproximationResult {
  std::string fingerprint;
  Rational epsilon;
  Rational beta;
  OracleKind oracle;
  bool exact_requery = false;
  std::vector<CellSolution> cells;
  ResultMetadata metadata;
};

/// Thrown by solve() when the instance fails validation.
class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

struct SolveOptions {
  /// Number of worker threads for the per-cell loop; results are merged in
  /// cell order, so the output does not depend on it.
  std::size_t parallel = 1;
  bool exact_requery = false;
};

/// Validates, builds the cells of the separating-hyperplane arrangement and
/// runs approximate_cell on each. The union of the per-cell strategy sets is
/// a (1 - eps) * beta approximation on the whole parameter polytope.
ApproximationResult solve(const Instance& instance, const Rational& epsilon,
                          const OracleKind& oracle, const SolveOptions& options = {});

struct QueryAnswer {
  Point lambda;
  Strategy strategy;
  Rational value;
  std::size_t cell_index = 0;
};

/// Best stored strategy at λ within the first cell containing λ. The value
/// is the certified lower bound, or y_F(λ) recomputed by the greedy
/// algorithm when the result was produced with exact_requery. Throws
/// DomainError when λ lies in no cell.
QueryAnswer query(const ApproximationResult& result, const Instance& instance, const Point& lambda);

/// Per-cell view of the approximation for plotting.
struct EnvelopeRecord {
  std::size_t cell_index = 0;
  std::vector<RationalForm> constraints;
  std::vector<Point> vertices;
  std::vector<StrategyForm> forms;
  /// One-parameter cells only: interior points where the maximizing form of
  /// the upper envelope changes, ascending.
  std::vector<Rational> breakpoints;
};

std::vector<EnvelopeRecord> envelope_export(const ApproximationResult& result);

/// Union of the per-cell strategy sets.
std::vector<Strategy> distinct_strategies(const ApproximationResult& result);

}  // namespace pmi

#endif  // PMI_FRAMEWORK_HPP
