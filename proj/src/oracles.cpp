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

#include "pmi/oracles.hpp"

#include <algorithm>
#include <optional>

#include "pmi/combinatorics.hpp"
#include "pmi/errors.hpp"

namespace pmi {

OracleKind OracleKind::synthetic(Rational beta) {
  if (!(beta > 0 && beta <= 1)) throw UsageError("oracle beta must satisfy 0 < beta <= 1");
  return {Type::synthetic, std::move(beta)};
}

OracleKind OracleKind::parse(std::string_view text) {
  if (text == "brute") return brute_force();
  if (text == "partition-dp") return partition_dp();
  constexpr std::string_view prefix = "synthetic:";
  if (text.starts_with(prefix)) {
    try {
      return synthetic(parse_rational(text.substr(prefix.size())));
    } catch (const InputError& e) {
      throw UsageError(e.what());
    }
  }
  throw UsageError("unknown oracle '" + std::string(text) +
                   "' (expected brute, partition-dp or synthetic:<beta>)");
}

std::string to_string(const OracleKind& kind) {
  switch (kind.type) {
    case OracleKind::Type::brute_force:
      return "brute";
    case OracleKind::Type::partition_dp:
      return "partition-dp";
    case OracleKind::Type::synthetic:
      return "synthetic:" + to_string(kind.beta);
  }
  return {};
}

namespace {

// y_F(λ) for every strategy F, in lexicographic order of F. The elements
// are sorted once and the greedy pass skips removed ones.
struct ScoredStrategy {
  std::vector<int> removed;
  Rational value;
};

std::vector<ScoredStrategy> score_all(const Instance& instance, const Point& lambda) {
  const auto order = weight_order(instance, lambda);
  std::vector<Rational> w;
  w.reserve(instance.weights.size());
  for (const auto& form : instance.weights) w.push_back(form(lambda));
  const int k = rank(instance.matroid);

  std::vector<ScoredStrategy> out;
  std::vector<char> is_removed(static_cast<std::size_t>(instance.m()), 0);
  for_each_combination(instance.m(), instance.ell, [&](std::span<const int> removed) {
    for (int e : removed) is_removed[static_cast<std::size_t>(e)] = 1;
    IndependenceBuilder builder(instance.matroid);
    Rational value = 0;
    for (int e : order) {
      if (builder.size() == k) break;
      if (!is_removed[static_cast<std::size_t>(e)] && builder.try_add(e)) {
        value += w[static_cast<std::size_t>(e)];
      }
    }
    for (int e : removed) is_removed[static_cast<std::size_t>(e)] = 0;
    if (builder.size() < k) throw InfeasibleError("restricted matroid has no basis of full rank");
    out.push_back({{removed.begin(), removed.end()}, std::move(value)});
  });
  return out;
}

}  // namespace

OracleAnswer brute_force_oracle(const Instance& instance, const Point& lambda) {
  auto scored = score_all(instance, lambda);
  std::size_t best = 0;
  for (std::size_t i = 1; i < scored.size(); ++i) {
    if (scored[i].value > scored[best].value) best = i;
  }
  return {Strategy{std::move(scored[best].removed)}, std::move(scored[best].value), Rational(1)};
}

OracleAnswer synthetic_oracle(const Instance& instance, const Point& lambda,
                              const Rational& beta) {
  if (!(beta > 0 && beta <= 1)) throw UsageError("oracle beta must satisfy 0 < beta <= 1");
  auto scored = score_all(instance, lambda);
  Rational optimum = scored.front().value;
  for (const auto& s : scored) optimum = std::max(optimum, s.value);
  const Rational threshold = beta * optimum;
  std::optional<std::size_t> pick;
  for (std::size_t i = 0; i < scored.size(); ++i) {
    if (scored[i].value < threshold) continue;
    if (!pick || scored[i].value < scored[*pick].value) pick = i;
  }
  return {Strategy{std::move(scored[*pick].removed)}, std::move(scored[*pick].value), beta};
}

OracleAnswer partition_dp_oracle(const Instance& instance, const Point& lambda) {
  const auto* part = instance.matroid.as_partition();
  if (part == nullptr) throw UsageError("partition-dp oracle requires a partition matroid");
  const std::size_t parts = part->parts.size();
  const int ell = instance.ell;

  // Per part: members sorted by (weight, index) and prefix sums of weights.
  std::vector<std::vector<int>> sorted(parts);
  std::vector<std::vector<Rational>> prefix(parts);
  for (std::size_t i = 0; i < parts; ++i) {
    auto& members = sorted[i];
    members = part->parts[i];
    std::vector<std::pair<Rational, int>> keyed;
    for (int e : members) keyed.emplace_back(instance.weights[static_cast<std::size_t>(e)](lambda), e);
    std::sort(keyed.begin(), keyed.end());
    prefix[i].assign(1, Rational(0));
    for (std::size_t j = 0; j < keyed.size(); ++j) {
      members[j] = keyed[j].second;
      prefix[i].push_back(prefix[i].back() + keyed[j].first);
    }
  }
  // cost(i, r): weight of the u_i cheapest survivors after dropping the r cheapest.
  auto cost = [&](std::size_t i, int r) {
    const auto u = static_cast<std::size_t>(part->capacities[i]);
    const auto from = static_cast<std::size_t>(r);
    return prefix[i][from + u] - prefix[i][from];
  };
  auto max_removals = [&](std::size_t i) {
    return static_cast<int>(part->parts[i].size()) - part->capacities[i];
  };

  // best[i][j]: optimal total over parts i.. when j removals remain.
  std::vector<std::vector<std::optional<Rational>>> best(
      parts + 1, std::vector<std::optional<Rational>>(static_cast<std::size_t>(ell) + 1));
  best[parts][0] = Rational(0);
  for (std::size_t i = parts; i-- > 0;) {
    for (int j = 0; j <= ell; ++j) {
      std::optional<Rational> value;
      for (int r = 0; r <= std::min(j, max_removals(i)); ++r) {
        const auto& rest = best[i + 1][static_cast<std::size_t>(j - r)];
        if (!rest) continue;
        Rational candidate = cost(i, r) + *rest;
        if (!value || candidate > *value) value = std::move(candidate);
      }
      best[i][static_cast<std::size_t>(j)] = std::move(value);
    }
  }
  if (!best[0][static_cast<std::size_t>(ell)]) {
    throw InfeasibleError("budget exceeds the removable elements of the partition");
  }

  std::vector<int> removed;
  int remaining = ell;
  for (std::size_t i = 0; i < parts; ++i) {
    const Rational& target = *best[i][static_cast<std::size_t>(remaining)];
    for (int r = std::min(remaining, max_removals(i)); r >= 0; --r) {
      const auto& rest = best[i + 1][static_cast<std::size_t>(remaining - r)];
      if (rest && cost(i, r) + *rest == target) {
        removed.insert(removed.end(), sorted[i].begin(), sorted[i].begin() + r);
        remaining -= r;
        break;
      }
    }
  }
  std::sort(removed.begin(), removed.end());
  return {Strategy{std::move(removed)}, *best[0][static_cast<std::size_t>(ell)], Rational(1)};
}

OracleAnswer call_oracle(const OracleKind& kind, const Instance& instance, const Point& lambda) {
  switch (kind.type) {
    case OracleKind::Type::brute_force:
      return brute_force_oracle(instance, lambda);
    case OracleKind::Type::partition_dp:
      return partition_dp_oracle(instance, lambda);
    case OracleKind::Type::synthetic:
      return synthetic_oracle(instance, lambda, kind.beta);
  }
  throw UsageError("unknown oracle kind");
}

}  // namespace pmi
