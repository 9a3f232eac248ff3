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

#include "pmi/cell_approx.hpp"

#include <set>
#include <stdexcept>

#include "pmi/errors.hpp"

namespace pmi {
namespace {

RationalForm value_form_at_anchor(const Instance& instance, const Strategy& strategy,
                                  const Point& anchor) {
  return basis_value_form(instance, min_weight_basis(instance, strategy.removed, anchor).basis);
}

Strategy checked(const Instance& instance, const OracleAnswer& answer) {
  try {
    return make_strategy(instance, answer.strategy.removed);
  } catch (const InputError& e) {
    throw OracleError(std::string("oracle returned an invalid strategy: ") + e.what());
  }
}

}  // namespace

Polytope<Rational> lift_cell(const Cell& cell) {
  const Index p = cell.polytope.dim();
  std::vector<RationalForm> lifted;
  lifted.reserve(cell.polytope.constraints().size());
  for (const auto& c : cell.polytope.constraints()) {
    Point g = Point::Zero(p + 1);
    g.head(p) = c.gradient;
    lifted.emplace_back(c.constant, std::move(g));
  }
  return Polytope<Rational>(std::move(lifted), p + 1, p);
}

RationalForm epigraph_constraint(const RationalForm& value_form) {
  const Index p = value_form.dim();
  Point g(p + 1);
  g.head(p) = -value_form.gradient;
  g[p] = 1;
  return RationalForm(-value_form.constant, std::move(g));
}

void add_strategy(const Instance& instance, CellSolution& state, Polytope<Rational>& lifted,
                  const Strategy& strategy) {
  RationalForm form;
  try {
    form = value_form_at_anchor(instance, strategy, state.anchor);
  } catch (const InfeasibleError& e) {
    throw OracleError(std::string("oracle strategy leaves no full-rank basis: ") + e.what());
  }
  lifted = intersect(lifted, epigraph_constraint(form));
  state.strategies.push_back({strategy, std::move(form)});
}

CellSolution approximate_cell(const Instance& instance, const Cell& cell, const Rational& epsilon,
                              const OracleKind& oracle) {
  if (!(epsilon > 0 && epsilon < 1)) throw UsageError("epsilon must satisfy 0 < epsilon < 1");
  const Index p = instance.p;
  const Rational keep = 1 - epsilon;

  CellSolution state;
  state.cell = cell;
  state.anchor = cell.interior_point;
  state.epsilon = epsilon;
  state.beta = oracle.beta;

  Polytope<Rational> lifted = lift_cell(cell);
  const auto first = call_oracle(oracle, instance, state.anchor);
  ++state.oracle_calls;
  add_strategy(instance, state, lifted, checked(instance, first));
  lifted = with_cache(lifted);

  std::set<Point, PointLess> cleared;
  while (true) {
    ++state.iterations;
    bool added = false;
    for (const auto& vertex : lifted.vertices()) {
      if (cleared.contains(vertex)) continue;
      const Point lambda = vertex.head(p);
      const Rational& z = vertex[p];
      const auto answer = call_oracle(oracle, instance, lambda);
      ++state.oracle_calls;
      const Strategy strategy = checked(instance, answer);
      const RationalForm form = value_form_at_anchor(instance, strategy, state.anchor);
      if (keep * form(lambda) > z) {
        for (const auto& kept : state.strategies) {
          if (kept.strategy == strategy) {
            throw std::logic_error("strategy already kept yet above the lower bound");
          }
        }
        add_strategy(instance, state, lifted, strategy);
        lifted = with_cache(lifted);
        added = true;
        break;
      }
      cleared.insert(vertex);
    }
    if (!added) break;
  }
  return state;
}

Polytope<Rational> lower_bound_polyhedron(const CellSolution& solution) {
  Polytope<Rational> lifted = lift_cell(solution.cell);
  for (const auto& s : solution.strategies) {
    lifted = intersect(lifted, epigraph_constraint(s.value_form));
  }
  return with_cache(lifted);
}

Point gamma(const Instance& instance, const Strategy& strategy, const Point& anchor) {
  const auto form = value_form_at_anchor(instance, strategy, anchor);
  Point g(instance.p + 1);
  g.head(instance.p) = form.gradient;
  g[instance.p] = form.constant;
  return g;
}

}  // namespace pmi
