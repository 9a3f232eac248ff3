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

#ifndef PMI_TESTS_SUPPORT_HPP
#define PMI_TESTS_SUPPORT_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pmi/instance.hpp"
#include "pmi/rational.hpp"

namespace pmi::test {

inline Rational q(const char* text) { return parse_rational(text); }

inline Point pt(std::initializer_list<const char*> coords) {
  Point x(static_cast<Index>(coords.size()));
  Index i = 0;
  for (const char* c : coords) x[i++] = q(c);
  return x;
}

inline RationalForm form(const char* constant, std::initializer_list<const char*> gradient) {
  RationalForm f;
  f.constant = q(constant);
  f.gradient = pt(gradient);
  return f;
}

// Parameter regions in g(λ) >= 0 form.
inline std::vector<RationalForm> interval(const Rational& lo, const Rational& hi) {
  RationalForm a, b;
  a.gradient = Point::Constant(1, Rational(1));
  a.constant = -lo;
  b.gradient = Point::Constant(1, Rational(-1));
  b.constant = hi;
  return {a, b};
}

inline std::vector<RationalForm> box(int p, const Rational& lo, const Rational& hi) {
  std::vector<RationalForm> out;
  for (int i = 0; i < p; ++i) {
    RationalForm a, b;
    a.gradient = Point::Zero(p);
    a.gradient[i] = 1;
    a.constant = -lo;
    b.gradient = Point::Zero(p);
    b.gradient[i] = -1;
    b.constant = hi;
    out.push_back(a);
    out.push_back(b);
  }
  return out;
}

// λ1, λ2 >= 0, λ1 + λ2 <= s
inline std::vector<RationalForm> triangle(const Rational& s) {
  auto out = box(2, 0, s);
  std::vector<RationalForm> tri{out[0], out[2]};
  RationalForm d;
  d.gradient = Point::Constant(2, Rational(-1));
  d.constant = s;
  tri.push_back(d);
  return tri;
}

// K3, weights 1+λ, 2, 3λ, ell = 1, I = [0, 2].
inline Instance tri1() {
  Instance inst;
  inst.matroid = Matroid::graphic(3, {{0, 1}, {1, 2}, {2, 0}});
  inst.weights = {form("1", {"1"}), form("2", {"0"}), form("0", {"3"})};
  inst.ell = 1;
  inst.p = 1;
  inst.polytope = interval(0, 2);
  return inst;
}

// Partition {e0,e1},{e2,e3}, capacity 1 each; weights 1, 2+λ, λ, 1+λ; ell = 1; I = [0, 1].
inline Instance part1() {
  Instance inst;
  inst.matroid = Matroid::partition({{0, 1}, {2, 3}}, {1, 1});
  inst.weights = {form("1", {"0"}), form("2", {"1"}), form("0", {"1"}), form("1", {"1"})};
  inst.ell = 1;
  inst.p = 1;
  inst.polytope = interval(0, 1);
  return inst;
}

inline Rational random_coefficient(std::mt19937_64& rng, int zero_percent) {
  if (std::uniform_int_distribution<int>(0, 99)(rng) < zero_percent) return 0;
  const int num = std::uniform_int_distribution<int>(1, 12)(rng);
  const int den = std::uniform_int_distribution<int>(1, 3)(rng);
  return Rational(num, den);
}

// Nonnegative weights with at most k - 1 zeros in every coefficient slot.
inline std::vector<RationalForm> random_weights(std::mt19937_64& rng, int m, int p, int k) {
  std::vector<RationalForm> w(m);
  for (auto& f : w) {
    f.constant = random_coefficient(rng, 25);
    f.gradient = Point(p);
    for (int i = 0; i < p; ++i) f.gradient[i] = random_coefficient(rng, 25);
  }
  auto fix = [&](auto get) {
    int zeros = 0;
    for (int e = 0; e < m; ++e) {
      Rational& c = get(w[e]);
      if (c == 0 && ++zeros > k - 1) c = Rational(1 + static_cast<int>(rng() % 5));
    }
  };
  fix([](RationalForm& f) -> Rational& { return f.constant; });
  for (int i = 0; i < p; ++i) fix([i](RationalForm& f) -> Rational& { return f.gradient[i]; });
  return w;
}

inline std::vector<RationalForm> random_region(std::mt19937_64& rng, int p) {
  if (p == 1) {
    const int lo = std::uniform_int_distribution<int>(0, 2)(rng);
    const int len = std::uniform_int_distribution<int>(1, 5)(rng);
    return interval(lo, lo + len);
  }
  if (rng() % 2 == 0) return box(2, 0, 1 + static_cast<int>(rng() % 2));
  return triangle(2 + static_cast<int>(rng() % 2));
}

// Partition matroid where every part keeps its capacity after removing any
// ell elements, so every interdiction leaves a full-rank basis.
inline Instance random_partition(std::mt19937_64& rng, int max_m, int max_ell, int p) {
  for (;;) {
    Instance inst;
    inst.ell = std::uniform_int_distribution<int>(1, max_ell)(rng);
    inst.p = p;
    const int parts = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<int> caps(parts), sizes(parts);
    int m = 0;
    for (int j = 0; j < parts; ++j) {
      caps[j] = std::uniform_int_distribution<int>(1, 2)(rng);
      sizes[j] = caps[j] + inst.ell + static_cast<int>(rng() % 2);
      m += sizes[j];
    }
    if (m > max_m) continue;
    std::vector<int> elements(m);
    std::iota(elements.begin(), elements.end(), 0);
    std::shuffle(elements.begin(), elements.end(), rng);
    std::vector<std::vector<int>> part_list(parts);
    int at = 0;
    for (int j = 0; j < parts; ++j) {
      for (int t = 0; t < sizes[j]; ++t) part_list[j].push_back(elements[at++]);
      std::sort(part_list[j].begin(), part_list[j].end());
    }
    inst.matroid = Matroid::partition(part_list, caps);
    const int k = std::accumulate(caps.begin(), caps.end(), 0);
    inst.weights = random_weights(rng, m, p, k);
    inst.polytope = random_region(rng, p);
    return inst;
  }
}

inline bool connected_without(int nodes, const std::vector<std::pair<int, int>>& edges,
                              const std::vector<bool>& removed) {
  std::vector<int> parent(nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = nodes;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (removed[e]) continue;
    const int a = find(edges[e].first), b = find(edges[e].second);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

// True when deleting any `cut` edges leaves the graph connected.
inline bool edge_connected(int nodes, const std::vector<std::pair<int, int>>& edges, int cut) {
  std::vector<bool> removed(edges.size(), false);
  std::function<bool(std::size_t, int)> go = [&](std::size_t from, int left) {
    if (!connected_without(nodes, edges, removed)) return false;
    if (left == 0) return true;
    for (std::size_t e = from; e < edges.size(); ++e) {
      removed[e] = true;
      const bool ok = go(e + 1, left - 1);
      removed[e] = false;
      if (!ok) return false;
    }
    return true;
  };
  return go(0, cut);
}

// Graph on at most `max_nodes` nodes that stays connected after deleting any
// ell edges. Starts from a cycle and adds random chords.
inline Instance random_graphic(std::mt19937_64& rng, int max_nodes, int max_ell, int max_m, int p) {
  for (;;) {
    Instance inst;
    inst.ell = std::uniform_int_distribution<int>(1, max_ell)(rng);
    inst.p = p;
    const int n = std::uniform_int_distribution<int>(3, max_nodes)(rng);
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    while (!edge_connected(n, edges, inst.ell) && static_cast<int>(edges.size()) < max_m) {
      const int a = static_cast<int>(rng() % n);
      int b = static_cast<int>(rng() % (n - 1));
      if (b >= a) ++b;
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    if (!edge_connected(n, edges, inst.ell)) continue;
    inst.matroid = Matroid::graphic(n, edges);
    inst.weights = random_weights(rng, static_cast<int>(edges.size()), p, n - 1);
    inst.polytope = random_region(rng, p);
    return inst;
  }
}

}  // namespace pmi::test

#endif  // PMI_TESTS_SUPPORT_HPP
