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

#include "pmi/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "pmi/errors.hpp"

namespace pmi {
namespace {

// Minimum basis weight of the matroid restricted to `kept` by reverse
// deletion: scan from heaviest to lightest and drop an element whenever the
// remaining set keeps its rank.
Rational reverse_delete_value(const Matroid& matroid, std::vector<int> kept,
                              const std::vector<Rational>& w) {
  std::sort(kept.begin(), kept.end(), [&](int a, int b) {
    const auto& wa = w[static_cast<std::size_t>(a)];
    const auto& wb = w[static_cast<std::size_t>(b)];
    return wa > wb || (wa == wb && a > b);
  });
  int current_rank = rank_of(matroid, kept);
  std::vector<int> trial;
  for (std::size_t i = 0; i < kept.size();) {
    trial = kept;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (rank_of(matroid, trial) == current_rank) {
      kept = std::move(trial);
    } else {
      ++i;
    }
  }
  if (current_rank < rank(matroid)) throw InfeasibleError("restricted matroid is rank deficient");
  Rational total = 0;
  for (int e : kept) total += w[static_cast<std::size_t>(e)];
  return total;
}

std::vector<Rational> weights_at(const Instance& instance, const Point& lambda) {
  std::vector<Rational> w;
  for (const auto& form : instance.weights) w.push_back(form(lambda));
  return w;
}

}  // namespace

Rational strategy_value(const Instance& instance, const Strategy& strategy, const Point& lambda) {
  std::vector<int> kept;
  for (int e = 0; e < instance.m(); ++e) {
    if (!std::binary_search(strategy.removed.begin(), strategy.removed.end(), e)) kept.push_back(e);
  }
  return reverse_delete_value(instance.matroid, std::move(kept), weights_at(instance, lambda));
}

ExactValue exact_value(const Instance& instance, const Point& lambda) {
  const int m = instance.m();
  const auto w = weights_at(instance, lambda);

  std::optional<ExactValue> best;
  std::vector<int> chosen;
  std::function<void(int)> recurse = [&](int next) {
    if (static_cast<int>(chosen.size()) == instance.ell) {
      std::vector<int> kept;
      for (int e = 0, j = 0; e < m; ++e) {
        if (j < instance.ell && chosen[static_cast<std::size_t>(j)] == e) {
          ++j;
        } else {
          kept.push_back(e);
        }
      }
      Rational value = reverse_delete_value(instance.matroid, std::move(kept), w);
      if (!best || value > best->value) best = ExactValue{std::move(value), Strategy{chosen}};
      return;
    }
    for (int e = next; e <= m - (instance.ell - static_cast<int>(chosen.size())); ++e) {
      chosen.push_back(e);
      recurse(e + 1);
      chosen.pop_back();
    }
  };
  recurse(0);
  return *best;
}

bool VerificationReport::passed() const {
  return violations.empty() && coverage_failures.empty() &&
         (!min_ratio || *min_ratio >= required_ratio);
}

std::optional<Point> sample_point(const Polytope<Rational>& poly, std::mt19937_64& rng,
                                  int max_attempts) {
  constexpr std::uint64_t kGrid = 1ULL << 16;
  const auto& verts = poly.vertices();
  const Index dim = poly.dim();
  Point lo = verts.front();
  Point hi = verts.front();
  for (const auto& v : verts) {
    for (Index i = 0; i < dim; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  }
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Point x(dim);
    for (Index i = 0; i < dim; ++i) {
      const auto step = static_cast<long long>(rng() % (kGrid + 1));
      x[i] = lo[i] + (hi[i] - lo[i]) * Rational(step, static_cast<long long>(kGrid));
    }
    if (contains(poly, x)) return x;
  }
  return std::nullopt;
}

std::vector<Point> crossing_points(const Polytope<Rational>& poly,
                                   const std::vector<RationalForm>& forms) {
  std::set<Point, PointLess> out;
  std::set<RationalForm, AffineFormLess<Rational>> planes;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = i + 1; j < forms.size(); ++j) {
      const RationalForm diff = forms[i] - forms[j];
      if (!diff.has_zero_gradient()) planes.insert(normalize_hyperplane(diff));
    }
  }
  for (const auto& plane : planes) {
    for (const auto& v : poly.vertices()) {
      if (plane(v) == 0) out.insert(v);
    }
    auto [below, above] = split(poly, Hyperplane<Rational>{plane});
    if (below && above) {
      for (const auto& v : below->vertices()) {
        if (plane(v) == 0) out.insert(v);
      }
    }
  }
  return {out.begin(), out.end()};
}

InvariantResult check_vertex_dominance(const Instance& instance, const CellSolution& solution,
                                       const OracleKind& oracle) {
  InvariantResult result{"vertex dominance at termination", true, ""};
  const Index p = instance.p;
  const Rational keep = 1 - solution.epsilon;
  const auto lifted = lower_bound_polyhedron(solution);
  for (const auto& v : lifted.vertices()) {
    const Point lambda = v.head(p);
    Rational top = solution.strategies.front().value_form(lambda);
    for (const auto& s : solution.strategies) top = std::max(top, s.value_form(lambda));
    if (top != v[p]) {
      result.passed = false;
      result.detail = "vertex " + to_string(Point(v)) + " is not on the upper envelope";
      return result;
    }
    const auto answer = call_oracle(oracle, instance, lambda);
    const auto basis = min_weight_basis(instance, answer.strategy.removed, solution.anchor).basis;
    if (keep * basis_value_form(instance, basis)(lambda) > v[p]) {
      result.passed = false;
      result.detail = "refinement test still fires at " + to_string(Point(v));
      return result;
    }
  }
  return result;
}

InvariantResult check_grid_once(const Instance& instance, const CellSolution& solution) {
  InvariantResult result{"at most one strategy per (1-eps)-box", true, ""};
  const Rational keep = 1 - solution.epsilon;
  std::vector<Point> g;
  for (const auto& s : solution.strategies) g.push_back(gamma(instance, s.strategy, solution.anchor));
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      if (a == b) continue;
      bool inside = true;
      for (Index i = 0; i < g[a].size() && inside; ++i) {
        inside = keep * g[b][i] <= g[a][i] && g[a][i] <= g[b][i];
      }
      if (inside) {
        result.passed = false;
        result.detail = "gamma" + to_string(solution.strategies[a].strategy) + " lies in the box of " +
                        to_string(solution.strategies[b].strategy);
        return result;
      }
    }
  }
  return result;
}

InvariantResult check_lower_bounds(const Instance& instance, const CellSolution& solution) {
  InvariantResult result{"stored forms bound y from below", true, ""};
  auto points = solution.cell.polytope.vertices();
  points.push_back(solution.anchor);
  for (const auto& x : points) {
    const Rational y = exact_value(instance, x).value;
    for (const auto& s : solution.strategies) {
      if (s.value_form(x) > y) {
        result.passed = false;
        result.detail = "form of " + to_string(s.strategy) + " exceeds y at " + to_string(x);
        return result;
      }
    }
  }
  return result;
}

InvariantResult check_basis_stability(const Instance& instance, const CellSolution& solution,
                                      std::size_t samples, std::mt19937_64& rng) {
  InvariantResult result{"interdicted bases constant on the cell", true, ""};
  for (const auto& s : solution.strategies) {
    const auto reference = min_weight_basis(instance, s.strategy.removed, solution.anchor).basis;
    for (std::size_t i = 0; i < samples; ++i) {
      const auto x = sample_point(solution.cell.polytope, rng);
      if (!x) continue;
      if (min_weight_basis(instance, s.strategy.removed, *x).basis != reference) {
        result.passed = false;
        result.detail = "basis of " + to_string(s.strategy) + " changes at " + to_string(*x);
        return result;
      }
    }
  }
  return result;
}

InvariantResult check_cell_envelope(const Instance& instance, const Cell& cell, std::size_t samples,
                                    std::mt19937_64& rng) {
  InvariantResult result{"y equals the envelope of the y_F on the cell", true, ""};
  std::set<RationalForm, AffineFormLess<Rational>> unique;
  std::vector<int> removed;
  std::function<void(int)> all = [&](int next) {
    if (static_cast<int>(removed.size()) == instance.ell) {
      unique.insert(basis_value_form(
          instance, min_weight_basis(instance, removed, cell.interior_point).basis));
      return;
    }
    for (int e = next; e < instance.m(); ++e) {
      removed.push_back(e);
      all(e + 1);
      removed.pop_back();
    }
  };
  all(0);
  const std::vector<RationalForm> forms(unique.begin(), unique.end());

  auto points = crossing_points(cell.polytope, forms);
  for (std::size_t i = 0; i < samples; ++i) {
    if (auto x = sample_point(cell.polytope, rng)) points.push_back(std::move(*x));
  }
  for (const auto& x : points) {
    Rational envelope = forms.front()(x);
    for (const auto& f : forms) envelope = std::max(envelope, f(x));
    const Rational y = exact_value(instance, x).value;
    if (envelope != y) {
      result.passed = false;
      result.detail = "at " + to_string(x) + " envelope " + to_string(envelope) + " != y " +
                      to_string(y);
      return result;
    }
  }
  return result;
}

namespace {

std::vector<Point> exhaustive_points(const Instance& instance, const CellSolution& solution) {
  std::set<RationalForm, AffineFormLess<Rational>> forms;
  for (const auto& s : solution.strategies) forms.insert(s.value_form);
  std::vector<int> removed;
  std::function<void(int)> all = [&](int next) {
    if (static_cast<int>(removed.size()) == instance.ell) {
      forms.insert(basis_value_form(
          instance, min_weight_basis(instance, removed, solution.anchor).basis));
      return;
    }
    for (int e = next; e < instance.m(); ++e) {
      removed.push_back(e);
      all(e + 1);
      removed.pop_back();
    }
  };
  all(0);
  std::set<RationalForm, AffineFormLess<Rational>> planes;
  for (auto a = forms.begin(); a != forms.end(); ++a) {
    for (auto b = std::next(a); b != forms.end(); ++b) {
      const RationalForm diff = *a - *b;
      if (!diff.has_zero_gradient()) planes.insert(normalize_hyperplane(diff));
    }
  }
  std::vector<Hyperplane<Rational>> hyperplanes;
  for (const auto& p : planes) hyperplanes.push_back({p});
  std::set<Point, PointLess> points;
  for (const auto& piece : arrangement_cells<Rational>(solution.cell.polytope, hyperplanes)) {
    points.insert(piece.vertices().begin(), piece.vertices().end());
  }
  return {points.begin(), points.end()};
}

}  // namespace

VerificationReport certify(const ApproximationResult& result, const Instance& instance,
                           const CertifyOptions& options) {
  if (result.fingerprint != instance_fingerprint(instance)) {
    throw UsageError("result fingerprint " + result.fingerprint +
                     " does not match the instance (" + instance_fingerprint(instance) + ")");
  }
  VerificationReport report;
  report.samples = options.samples;
  report.seed = options.seed;
  report.required_ratio = (1 - result.epsilon) * result.beta;

  // A stored form only counts up to what its strategy actually achieves.
  auto achieved = [&](const StrategyForm& s, const Point& x) {
    return std::min(s.value_form(x), strategy_value(instance, s.strategy, x));
  };
  auto check = [&](const Point& x, const std::optional<Rational>& certified_override) {
    ++report.points_checked;
    Rational certified;
    if (certified_override) {
      certified = *certified_override;
    } else {
      try {
        const auto answer = query(result, instance, x);
        certified = std::min(answer.value, strategy_value(instance, answer.strategy, x));
      } catch (const DomainError&) {
        report.coverage_failures.push_back(x);
        return;
      }
    }
    const Rational exact = exact_value(instance, x).value;
    if (exact > 0) {
      const Rational ratio = certified / exact;
      if (!report.min_ratio || ratio < *report.min_ratio) report.min_ratio = ratio;
    }
    if (certified < report.required_ratio * exact) {
      report.violations.push_back({x, std::move(certified), exact});
    }
  };

  std::mt19937_64 rng(options.seed);
  const auto region = parameter_polytope(instance);
  for (std::size_t i = 0; i < options.samples; ++i) {
    if (auto x = sample_point(region, rng)) check(*x, std::nullopt);
  }

  std::set<Point, PointLess> candidates;
  for (const auto& cell : result.cells) {
    candidates.insert(cell.anchor);
    candidates.insert(cell.cell.polytope.vertices().begin(), cell.cell.polytope.vertices().end());
    std::vector<RationalForm> forms;
    for (const auto& s : cell.strategies) forms.push_back(s.value_form);
    for (auto& x : crossing_points(cell.cell.polytope, forms)) candidates.insert(std::move(x));
  }
  for (const auto& x : candidates) check(x, std::nullopt);

  if (options.exhaustive) {
    for (const auto& cell : result.cells) {
      for (const auto& x : exhaustive_points(instance, cell)) {
        Rational best = 0;
        for (const auto& s : cell.strategies) best = std::max(best, achieved(s, x));
        check(x, best);
      }
    }
  }

  if (options.check_invariants) {
    InvariantResult dominance{"vertex dominance at termination", true, ""};
    InvariantResult grid{"at most one strategy per (1-eps)-box", true, ""};
    for (std::size_t i = 0; i < result.cells.size(); ++i) {
      const auto& cell = result.cells[i];
      if (cell.strategies.empty()) {
        dominance = {dominance.name, false, "cell " + std::to_string(i) + " stores no strategy"};
        continue;
      }
      if (dominance.passed) {
        auto r = check_vertex_dominance(instance, cell, result.oracle);
        if (!r.passed) dominance = {r.name, false, "cell " + std::to_string(i) + ": " + r.detail};
      }
      if (grid.passed) {
        auto r = check_grid_once(instance, cell);
        if (!r.passed) grid = {r.name, false, "cell " + std::to_string(i) + ": " + r.detail};
      }
    }
    report.invariants.push_back(std::move(dominance));
    report.invariants.push_back(std::move(grid));
  }
  return report;
}

}  // namespace pmi
