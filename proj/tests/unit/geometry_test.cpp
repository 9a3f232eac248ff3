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

#include <doctest.h>

#include <algorithm>
#include <random>

#include "pmi/arrangement.hpp"
#include "pmi/errors.hpp"
#include "pmi/geometry.hpp"
#include "pmi/verify.hpp"
#include "../support.hpp"

using namespace pmi;
using pmi::test::form;
using pmi::test::pt;
using pmi::test::q;

namespace {

Polytope<Rational> cached(std::vector<RationalForm> constraints, Index dim) {
  return with_cache(Polytope<Rational>(std::move(constraints), dim));
}

bool has_vertex(const std::vector<Point>& vs, const Point& x) {
  return std::any_of(vs.begin(), vs.end(), [&](const Point& v) { return equal(v, x); });
}

}  // namespace

TEST_CASE("exact linear algebra") {
  Matrix<Rational> a(2, 2);
  a << 1, 2, 3, 4;
  Vector<Rational> b(2);
  b << 5, 6;
  const auto x = linalg::solve_unique(a, b);
  REQUIRE(x);
  CHECK((*x)[0] == -4);
  CHECK((*x)[1] == q("9/2"));

  Matrix<Rational> singular(2, 2);
  singular << 1, 2, 2, 4;
  CHECK_FALSE(linalg::solve_unique(singular, b));
  CHECK(linalg::rank(singular) == 1);
}

TEST_CASE("affine form normalization") {
  const auto h = normalize_hyperplane(form("-2", {"-4"}));
  CHECK(h == form("1/2", {"1"}));
  const auto g = normalize_halfspace(form("-2", {"-4"}));
  CHECK(g == form("-1/2", {"-1"}));
}

TEST_CASE("split examples") {
  const auto interval = cached(pmi::test::interval(0, 2), 1);
  const auto cut = split(interval, Hyperplane<Rational>{form("-1", {"1"})});
  REQUIRE(cut.below);
  REQUIRE(cut.above);
  CHECK(has_vertex(cut.below->vertices(), pt({"0"})));
  CHECK(has_vertex(cut.below->vertices(), pt({"1"})));
  CHECK(has_vertex(cut.above->vertices(), pt({"2"})));

  const auto miss = split(interval, Hyperplane<Rational>{form("-3", {"1"})});
  REQUIRE(miss.below);
  CHECK_FALSE(miss.above);
  CHECK(miss.below->vertices().size() == 2);

  const auto square = cached(pmi::test::box(2, 0, 1), 2);
  const auto diag = split(square, Hyperplane<Rational>{form("0", {"1", "-1"})});
  REQUIRE(diag.below);
  REQUIRE(diag.above);
  CHECK(equal(*diag.below->interior(), pt({"1/3", "2/3"})));
  CHECK(equal(*diag.above->interior(), pt({"2/3", "1/3"})));
}

TEST_CASE("vertex enumeration examples") {
  // [1/2, 2/3] lifted by z >= 2 + 3λ
  std::vector<RationalForm> lifted{form("-1/2", {"1", "0"}), form("2/3", {"-1", "0"}),
                                   form("-2", {"-3", "1"})};
  const auto en = enumerate_vertices<Rational>(lifted, 2, 1);
  CHECK(en.vertices.size() == 2);
  CHECK(has_vertex(en.vertices, pt({"1/2", "7/2"})));
  CHECK(has_vertex(en.vertices, pt({"2/3", "4"})));

  CHECK(cached(pmi::test::box(2, 0, 1), 2).vertices().size() == 4);

  std::vector<RationalForm> tri{form("0", {"1", "0", "0"}), form("0", {"0", "1", "0"}),
                                form("1", {"-1", "-1", "0"}), form("0", {"-1", "0", "1"}),
                                form("0", {"0", "-1", "1"})};
  const auto t = enumerate_vertices<Rational>(tri, 3, 2);
  CHECK(t.vertices.size() == 4);
  for (const auto* v : {"0,0,0", "1,0,1", "0,1,1", "1/2,1/2,1/2"}) {
    CHECK(has_vertex(t.vertices, parse_point(v)));
  }

  std::vector<RationalForm> open{form("0", {"1"})};
  CHECK_THROWS_AS(enumerate_vertices<Rational>(open, 1, std::nullopt), UnboundedError);
}

TEST_CASE("interior point examples") {
  CHECK(equal(*cached(pmi::test::interval(q("1/2"), q("2/3")), 1).interior(), pt({"7/12"})));
  CHECK(equal(*cached(pmi::test::box(2, 0, 1), 2).interior(), pt({"1/2", "1/2"})));
  CHECK(equal(*cached(pmi::test::triangle(1), 2).interior(), pt({"1/3", "1/3"})));

  std::vector<RationalForm> flat{form("0", {"1"}), form("0", {"-1"})};
  CHECK_THROWS_AS(cached(flat, 1), DegeneracyError);
  CHECK_FALSE(make_full_dimensional(flat, 1));
}

TEST_CASE("redundant constraints are pruned") {
  auto constraints = pmi::test::box(2, 0, 1);
  constraints.push_back(form("5", {"-1", "-1"}));
  constraints.push_back(pmi::test::box(2, 0, 1)[0]);
  CHECK(cached(constraints, 2).constraints().size() == 4);
}

TEST_CASE("containment on closed cells") {
  const auto cell = cached(pmi::test::interval(0, q("1/2")), 1);
  CHECK(contains(cell, pt({"1/2"})));
  CHECK_FALSE(contains(cell, pt({"3/4"})));
  CHECK_FALSE(strictly_contains(cell, pt({"1/2"})));
  CHECK(contains(cached(pmi::test::interval(q("1/2"), q("2/3")), 1), pt({"7/12"})));
}

TEST_CASE("separating hyperplanes of TRI1 and PART1") {
  const auto tri = separating_hyperplanes(pmi::test::tri1());
  REQUIRE(tri.size() == 3);
  // λ - c = 0 after normalization
  CHECK(tri[0].form == form("-1", {"1"}));
  CHECK(tri[1].form == form("-1/2", {"1"}));
  CHECK(tri[2].form == form("-2/3", {"1"}));

  const auto part = separating_hyperplanes(pmi::test::part1());
  std::vector<Rational> roots;
  for (const auto& h : part) roots.push_back(-h.form.constant / h.form.gradient[0]);
  std::sort(roots.begin(), roots.end());
  CHECK(roots == std::vector<Rational>{-1, 0, 1});
}

TEST_CASE("identical weight forms contribute no hyperplane") {
  auto inst = pmi::test::tri1();
  inst.weights[1] = inst.weights[0];
  // (e1,e3) and (e2,e3) now coincide at λ = 1/2
  CHECK(separating_hyperplanes(inst).size() == 1);
}

TEST_CASE("cells of TRI1 and PART1") {
  const auto cells = build_cells(pmi::test::tri1());
  REQUIRE(cells.size() == 4);
  const std::vector<std::pair<const char*, const char*>> bounds{
      {"0", "1/2"}, {"1/2", "2/3"}, {"2/3", "1"}, {"1", "2"}};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& vs = cells[i].polytope.vertices();
    REQUIRE(vs.size() == 2);
    const Rational lo = std::min(vs[0][0], vs[1][0]);
    const Rational hi = std::max(vs[0][0], vs[1][0]);
    CHECK(lo == q(bounds[i].first));
    CHECK(hi == q(bounds[i].second));
    CHECK(cells[i].sign_vector.size() == 3);
  }
  const auto single = build_cells(pmi::test::part1());
  REQUIRE(single.size() == 1);
  CHECK(single[0].polytope.vertices().size() == 2);
}

TEST_CASE("cells cover the region and overlap only on hyperplanes") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 6; ++round) {
    const auto inst = pmi::test::random_partition(rng, 8, 2, 2);
    const auto hyperplanes = separating_hyperplanes(inst);
    const auto cells = build_cells(inst, hyperplanes);
    const auto region = parameter_polytope(inst);
    for (int s = 0; s < 40; ++s) {
      const auto x = sample_point(region, rng);
      REQUIRE(x);
      int covering = 0;
      for (const auto& c : cells) covering += contains(c.polytope, *x) ? 1 : 0;
      const bool on_hyperplane = std::any_of(hyperplanes.begin(), hyperplanes.end(),
                                             [&](const auto& h) { return h.form(*x) == 0; });
      CHECK(covering >= 1);
      if (!on_hyperplane) CHECK(covering == 1);
    }
    for (const auto& c : cells) CHECK(strictly_contains(c.polytope, c.interior_point));
  }
}
