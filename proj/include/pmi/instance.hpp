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

#ifndef PMI_INSTANCE_HPP
#define PMI_INSTANCE_HPP

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "pmi/affine_form.hpp"
#include "pmi/geometry.hpp"
#include "pmi/matroid.hpp"
#include "pmi/rational.hpp"

namespace pmi {

/// An interdiction strategy: the sorted set of removed elements.
struct Strategy {
  std::vector<int> removed;

  auto operator<=>(const Strategy&) const = default;
  bool operator==(const Strategy&) const = default;
};

std::string to_string(const Strategy& strategy);

/// A multi-parametric matroid interdiction instance.
///
/// Element e has weight weights[e](λ) for λ in the parameter polytope
/// { λ : g(λ) >= 0 for g in polytope }; `ell` elements are removed.
struct Instance {
  Matroid matroid = Matroid::uniform(0, 0);
  std::vector<RationalForm> weights;
  int ell = 0;
  int p = 0;
  std::vector<RationalForm> polytope;

  int m() const { return matroid.ground_size(); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Throws InputError unless lengths and dimensions are consistent and
/// 1 <= ell < m.
void check_structure(const Instance& instance);

/// Sorts `removed`, checks the size and the index range.
Strategy make_strategy(const Instance& instance, std::vector<int> removed);

struct BasisResult {
  std::vector<int> basis;  // ascending
  Rational value;
};

/// Elements ordered by (w(e, λ), e).
std::vector<int> weight_order(const Instance& instance, const Point& lambda);

/// Greedy minimum-weight basis of the matroid restricted away from
/// `removed`. Throws InfeasibleError if that restriction has lower rank.
BasisResult min_weight_basis(const Instance& instance, std::span<const int> removed,
                             const Point& lambda);

/// Sum of the weight forms over `basis`.
RationalForm basis_value_form(const Instance& instance, std::span<const int> basis);

/// The parameter polytope with vertex cache and interior point.
Polytope<Rational> parameter_polytope(const Instance& instance);

enum class CheckStatus { pass, fail, not_required };

struct AssumptionCheck {
  int number = 0;
  std::string title;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct ValidationReport {
  std::vector<AssumptionCheck> checks;

  bool passed() const;
  std::string describe() const;
};

/// Checks the standing assumptions: full rank after any ell removals,
/// nonnegative coefficients with few zeros, and a nonempty, bounded,
/// full-dimensional, nonnegative parameter polytope. Structural problems
/// throw InputError instead.
ValidationReport validate_instance(const Instance& instance);

/// Stable 64-bit content hash of the instance, as 16 hex digits.
std::string instance_fingerprint(const Instance& instance);

}  // namespace pmi

#endif  // PMI_INSTANCE_HPP
