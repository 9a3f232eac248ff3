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

#include "pmi/framework.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "pmi/arrangement.hpp"

namespace pmi {

ValidationError::ValidationError(ValidationReport report)
    : Error("instance violates the standing assumptions:\n" + report.describe()),
      report_(std::move(report)) {}

ApproximationResult solve(const Instance& instance, const Rational& epsilon,
                          const OracleKind& oracle, const SolveOptions& options) {
  if (!(epsilon > 0 && epsilon < 1)) throw UsageError("epsilon must satisfy 0 < epsilon < 1");
  if (oracle.type == OracleKind::Type::partition_dp && !instance.matroid.as_partition()) {
    throw UsageError("partition-dp oracle requires a partition matroid");
  }
  const auto start = std::chrono::steady_clock::now();
  auto report = validate_instance(instance);
  if (!report.passed()) throw ValidationError(std::move(report));

  const auto hyperplanes = separating_hyperplanes(instance);
  const auto cells = build_cells(instance, hyperplanes);

  ApproximationResult result;
  result.fingerprint = instance_fingerprint(instance);
  result.epsilon = epsilon;
  result.beta = oracle.beta;
  result.oracle = oracle;
  result.exact_requery = options.exact_requery;
  result.cells.resize(cells.size());

  const std::size_t workers = std::clamp<std::size_t>(options.parallel, 1, cells.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      result.cells[i] = approximate_cell(instance, cells[i], epsilon, oracle);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
          try {
            result.cells[i] = approximate_cell(instance, cells[i], epsilon, oracle);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
  }

  result.metadata.hyperplanes = hyperplanes.size();
  result.metadata.cells = cells.size();
  for (const auto& c : result.cells) result.metadata.oracle_calls += c.oracle_calls;
  result.metadata.distinct_strategies = distinct_strategies(result).size();
  result.metadata.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<Strategy> distinct_strategies(const ApproximationResult& result) {
  std::set<Strategy> all;
  for (const auto& c : result.cells) {
    for (const auto& s : c.strategies) all.insert(s.strategy);
  }
  return {all.begin(), all.end()};
}

QueryAnswer query(const ApproximationResult& result, const Instance& instance, const Point& lambda) {
  if (lambda.size() != instance.p) {
    throw InputError("parameter vector has dimension " + std::to_string(lambda.size()) +
                     ", expected " + std::to_string(instance.p));
  }
  for (std::size_t i = 0; i < result.cells.size(); ++i) {
    const auto& cell = result.cells[i];
    if (!contains(cell.cell.polytope, lambda)) continue;
    QueryAnswer answer;
    answer.lambda = lambda;
    answer.cell_index = i;
    bool first = true;
    for (const auto& s : cell.strategies) {
      Rational value = s.value_form(lambda);
      if (first || value > answer.value) {
        answer.value = std::move(value);
        answer.strategy = s.strategy;
        first = false;
      }
    }
    if (result.exact_requery) {
      answer.value = min_weight_basis(instance, answer.strategy.removed, lambda).value;
    }
    return answer;
  }
  throw DomainError("parameter vector " + to_string(lambda) + " lies outside the parameter polytope");
}

namespace {

std::vector<Rational> envelope_breakpoints(const CellSolution& cell) {
  const auto& verts = cell.cell.polytope.vertices();
  const Rational lo = verts.front()[0];
  const Rational hi = verts.back()[0];
  const auto& forms = cell.strategies;

  std::set<Rational> cuts{lo, hi};
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = i + 1; j < forms.size(); ++j) {
      const RationalForm diff = forms[i].value_form - forms[j].value_form;
      if (diff.has_zero_gradient()) continue;
      const Rational x = -diff.constant / diff.gradient[0];
      if (x > lo && x < hi) cuts.insert(x);
    }
  }
  // The maximizing form is constant between consecutive cuts.
  auto argmax_at = [&](const Rational& x) {
    Point at(1);
    at[0] = x;
    std::size_t best = 0;
    for (std::size_t i = 1; i < forms.size(); ++i) {
      if (forms[i].value_form(at) > forms[best].value_form(at)) best = i;
    }
    return best;
  };
  std::vector<Rational> sorted(cuts.begin(), cuts.end());
  std::vector<Rational> out;
  for (std::size_t i = 1; i + 1 < sorted.size(); ++i) {
    const auto left = argmax_at((sorted[i - 1] + sorted[i]) / 2);
    const auto right = argmax_at((sorted[i] + sorted[i + 1]) / 2);
    if (!(forms[left].value_form == forms[right].value_form)) out.push_back(sorted[i]);
  }
  return out;
}

}  // namespace

std::vector<EnvelopeRecord> envelope_export(const ApproximationResult& result) {
  std::vector<EnvelopeRecord> out;
  out.reserve(result.cells.size());
  for (std::size_t i = 0; i < result.cells.size(); ++i) {
    const auto& cell = result.cells[i];
    EnvelopeRecord record;
    record.cell_index = i;
    record.constraints = cell.cell.polytope.constraints();
    record.vertices = cell.cell.polytope.vertices();
    record.forms = cell.strategies;
    if (cell.cell.polytope.dim() == 1) record.breakpoints = envelope_breakpoints(cell);
    out.push_back(std::move(record));
  }
  return out;
}

}  // namespace pmi
