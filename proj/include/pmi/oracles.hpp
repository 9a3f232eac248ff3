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

#ifndef PMI_ORACLES_HPP
#define PMI_ORACLES_HPP

#include <string>
#include <string_view>

#include "pmi/instance.hpp"

namespace pmi {

/// A strategy for one fixed λ together with its value y_F(λ) and the
/// approximation factor certified by the oracle that produced it.
struct OracleAnswer {
  Strategy strategy;
  Rational value;
  Rational beta;
};

/// Selects a non-parametric oracle.
struct OracleKind {
  enum class Type { brute_force, partition_dp, synthetic };

  Type type = Type::brute_force;
  Rational beta{1};

  static OracleKind brute_force() { return {Type::brute_force, Rational(1)}; }
  static OracleKind partition_dp() { return {Type::partition_dp, Rational(1)}; }
  /// Throws UsageError unless 0 < beta <= 1.
  static OracleKind synthetic(Rational beta);

  /// Parses "brute", "partition-dp" or "synthetic:<rational>".
  static OracleKind parse(std::string_view text);

  friend bool operator==(const OracleKind&, const OracleKind&) = default;
};

std::string to_string(const OracleKind& kind);

/// Exhaustive maximization over all ell-subsets; ties go to the
/// lexicographically smallest strategy.
OracleAnswer brute_force_oracle(const Instance& instance, const Point& lambda);

/// Exact dynamic program for partition matroids. Within a part the best
/// r removals are its r cheapest elements; the program distributes the
/// budget over the parts, preferring removals in earlier parts on ties.
OracleAnswer partition_dp_oracle(const Instance& instance, const Point& lambda);

/// Among the strategies with value >= beta * y(λ) returns one of smallest
/// value: the weakest answer a beta-oracle may legally give.
OracleAnswer synthetic_oracle(const Instance& instance, const Point& lambda, const Rational& beta);

OracleAnswer call_oracle(const OracleKind& kind, const Instance& instance, const Point& lambda);

}  // namespace pmi

#endif  // PMI_ORACLES_HPP
