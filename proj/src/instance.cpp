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

#include "pmi/instance.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "pmi/combinatorics.hpp"
#include "pmi/errors.hpp"

namespace pmi {

std::string to_string(const Strategy& strategy) {
  std::string out = "{";
  for (std::size_t i = 0; i < strategy.removed.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(strategy.removed[i]);
  }
  return out + "}";
}

void check_structure(const Instance& instance) {
  const int m = instance.m();
  if (instance.p < 1) throw InputError("p must be positive");
  if (static_cast<int>(instance.weights.size()) != m) {
    throw InputError("expected " + std::to_string(m) + " weights, got " +
                     std::to_string(instance.weights.size()));
  }
  for (std::size_t e = 0; e < instance.weights.size(); ++e) {
    if (instance.weights[e].dim() != instance.p) {
      throw InputError("weight " + std::to_string(e) + " has wrong parameter dimension");
    }
  }
  for (std::size_t j = 0; j < instance.polytope.size(); ++j) {
    if (instance.polytope[j].dim() != instance.p) {
      throw InputError("polytope constraint " + std::to_string(j) + " has wrong dimension");
    }
  }
  if (instance.ell < 1 || instance.ell >= m) throw InputError("ell must satisfy 1 <= ell < m");
}

Strategy make_strategy(const Instance& instance, std::vector<int> removed) {
  std::sort(removed.begin(), removed.end());
  if (static_cast<int>(removed.size()) != instance.ell) {
    throw InputError("strategy must remove exactly ell elements");
  }
  if (std::adjacent_find(removed.begin(), removed.end()) != removed.end()) {
    throw InputError("strategy repeats an element");
  }
  for (int e : removed) {
    if (e < 0 || e >= instance.m()) throw InputError("strategy element out of range");
  }
  return Strategy{std::move(removed)};
}

std::vector<int> weight_order(const Instance& instance, const Point& lambda) {
  std::vector<Rational> values;
  values.reserve(instance.weights.size());
  for (const auto& w : instance.weights) values.push_back(w(lambda));
  std::vector<int> order(instance.weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& wa = values[static_cast<std::size_t>(a)];
    const auto& wb = values[static_cast<std::size_t>(b)];
    return wa < wb || (wa == wb && a < b);
  });
  return order;
}

BasisResult min_weight_basis(const Instance& instance, std::span<const int> removed,
                             const Point& lambda) {
  std::vector<char> is_removed(static_cast<std::size_t>(instance.m()), 0);
  for (int e : removed) {
    if (e < 0 || e >= instance.m()) throw InputError("removed element out of range");
    is_removed[static_cast<std::size_t>(e)] = 1;
  }
  IndependenceBuilder builder(instance.matroid);
  BasisResult result;
  for (int e : weight_order(instance, lambda)) {
    if (is_removed[static_cast<std::size_t>(e)]) continue;
    if (builder.try_add(e)) {
      result.basis.push_back(e);
      result.value += instance.weights[static_cast<std::size_t>(e)](lambda);
    }
  }
  if (static_cast<int>(result.basis.size()) < rank(instance.matroid)) {
    throw InfeasibleError("restricted matroid has no basis of full rank");
  }
  std::sort(result.basis.begin(), result.basis.end());
  return result;
}

RationalForm basis_value_form(const Instance& instance, std::span<const int> basis) {
  RationalForm sum(instance.p);
  for (int e : basis) sum += instance.weights.at(static_cast<std::size_t>(e));
  return sum;
}

Polytope<Rational> parameter_polytope(const Instance& instance) {
  return with_cache(Polytope<Rational>(instance.polytope, instance.p));
}

bool ValidationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const auto& c) { return c.status == CheckStatus::fail; });
}

std::string ValidationReport::describe() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    const char* status = c.status == CheckStatus::pass   ? "PASS"
                         : c.status == CheckStatus::fail ? "FAIL"
                                                         : "N/A ";
    out << status << "  Assumption " << c.number << " (" << c.title << ")";
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  return out.str();
}

namespace {

AssumptionCheck check_full_rank(const Instance& instance) {
  AssumptionCheck check{1, "full-rank basis after every interdiction", CheckStatus::pass, ""};
  const int k = rank(instance.matroid);
  const int m = instance.m();
  std::vector<int> kept;
  for_each_combination(m, instance.ell, [&](std::span<const int> removed) {
    if (check.status == CheckStatus::fail) return;
    kept.clear();
    std::size_t next = 0;
    for (int e = 0; e < m; ++e) {
      if (next < removed.size() && removed[next] == e) {
        ++next;
      } else {
        kept.push_back(e);
      }
    }
    if (rank_of(instance.matroid, kept) < k) {
      check.status = CheckStatus::fail;
      check.detail = "removing " + to_string(Strategy{{removed.begin(), removed.end()}}) +
                     " drops the rank below " + std::to_string(k);
    }
  });
  return check;
}

AssumptionCheck check_coefficients(const Instance& instance) {
  AssumptionCheck check{3, "nonnegative weights with at most k-1 zeros", CheckStatus::pass, ""};
  const int k = rank(instance.matroid);
  int zero_constants = 0;
  std::vector<int> zero_slopes(static_cast<std::size_t>(instance.p), 0);
  for (std::size_t e = 0; e < instance.weights.size(); ++e) {
    const auto& w = instance.weights[e];
    if (w.constant < 0) {
      check.status = CheckStatus::fail;
      check.detail = "a_" + std::to_string(e) + " is negative";
      return check;
    }
    if (w.constant == 0) ++zero_constants;
    for (Index i = 0; i < w.dim(); ++i) {
      if (w.gradient[i] < 0) {
        check.status = CheckStatus::fail;
        check.detail = "b_" + std::to_string(i) + "," + std::to_string(e) + " is negative";
        return check;
      }
      if (w.gradient[i] == 0) ++zero_slopes[static_cast<std::size_t>(i)];
    }
  }
  if (zero_constants > k - 1) {
    check.status = CheckStatus::fail;
    check.detail = std::to_string(zero_constants) + " constants are zero, rank is " +
                   std::to_string(k);
    return check;
  }
  for (std::size_t i = 0; i < zero_slopes.size(); ++i) {
    if (zero_slopes[i] > k - 1) {
      check.status = CheckStatus::fail;
      check.detail = std::to_string(zero_slopes[i]) + " coefficients of parameter " +
                     std::to_string(i) + " are zero, rank is " + std::to_string(k);
      return check;
    }
  }
  return check;
}

AssumptionCheck check_parameter_polytope(const Instance& instance) {
  AssumptionCheck check{4, "nonempty, compact, full-dimensional, nonnegative parameter polytope",
                        CheckStatus::pass, ""};
  try {
    const auto poly = parameter_polytope(instance);
    for (const auto& v : poly.vertices()) {
      for (Index i = 0; i < v.size(); ++i) {
        if (v[i] < 0) {
          check.status = CheckStatus::fail;
          check.detail = "vertex " + to_string(v) + " has a negative coordinate";
          return check;
        }
      }
    }
  } catch (const UnboundedError& e) {
    check.status = CheckStatus::fail;
    check.detail = e.what();
  } catch (const DegeneracyError& e) {
    check.status = CheckStatus::fail;
    check.detail = e.what();
  }
  return check;
}

void append_form(std::ostringstream& out, const RationalForm& form) {
  out << to_string(form.constant);
  for (Index i = 0; i < form.dim(); ++i) out << ',' << to_string(form.gradient[i]);
  out << ';';
}

}  // namespace

ValidationReport validate_instance(const Instance& instance) {
  check_structure(instance);
  ValidationReport report;
  report.checks.push_back(check_full_rank(instance));
  report.checks.push_back({2, "no vertical separating hyperplane", CheckStatus::not_required,
                           "not required by this implementation"});
  report.checks.push_back(check_coefficients(instance));
  report.checks.push_back(check_parameter_polytope(instance));
  return report;
}

std::string instance_fingerprint(const Instance& instance) {
  std::ostringstream out;
  if (const auto* u = instance.matroid.as_uniform()) {
    out << "uniform:" << u->k << ':' << instance.m();
  } else if (const auto* part = instance.matroid.as_partition()) {
    out << "partition:";
    for (std::size_t i = 0; i < part->parts.size(); ++i) {
      out << part->capacities[i] << '[';
      for (int e : part->parts[i]) out << e << ',';
      out << ']';
    }
  } else {
    const auto* graph = instance.matroid.as_graphic();
    out << "graphic:" << graph->nodes << ':';
    for (const auto& [u, v] : graph->edges) out << u << '-' << v << ',';
  }
  out << "|ell=" << instance.ell << "|p=" << instance.p << "|w=";
  for (const auto& w : instance.weights) append_form(out, w);
  out << "|I=";
  for (const auto& g : instance.polytope) append_form(out, g);

  // FNV-1a, 64 bit.
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : out.str()) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace pmi
