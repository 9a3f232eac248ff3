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

#include "pmi/errors.hpp"
#include "pmi/framework.hpp"
#include "pmi/verify.hpp"
#include "../support.hpp"

using namespace pmi;
using pmi::test::form;
using pmi::test::pt;
using pmi::test::q;

TEST_CASE("exact_value examples") {
  const auto tri = pmi::test::tri1();
  auto v = exact_value(tri, pt({"1/4"}));
  CHECK(v.value == q("13/4"));
  CHECK(v.strategy.removed == std::vector<int>{2});
  v = exact_value(tri, pt({"3/4"}));
  CHECK(v.value == q("17/4"));
  CHECK(v.strategy.removed == std::vector<int>{0});
  v = exact_value(pmi::test::part1(), pt({"1"}));
  CHECK(v.value == 4);
  CHECK(v.strategy.removed == std::vector<int>{0});
  CHECK(strategy_value(tri, make_strategy(tri, {1}), pt({"3/2"})) == 7);
}

TEST_CASE("certify accepts the exact TRI1 result") {
  const auto tri = pmi::test::tri1();
  const auto r = solve(tri, q("1/10"), OracleKind::brute_force());
  const auto report = certify(r, tri, {500, 0, true, true});
  CHECK(report.passed());
  REQUIRE(report.min_ratio);
  CHECK(*report.min_ratio == 1);
  CHECK(report.violations.empty());
  for (const auto& inv : report.invariants) CHECK(inv.passed);
}

TEST_CASE("certify with a half oracle") {
  const auto tri = pmi::test::tri1();
  const auto r = solve(tri, q("1/10"), OracleKind::synthetic(q("1/2")));
  const auto report = certify(r, tri, {300, 3, true, true});
  CHECK(report.passed());
  CHECK(report.required_ratio == q("9/20"));
  REQUIRE(report.min_ratio);
  CHECK(*report.min_ratio >= q("9/20"));
}

TEST_CASE("certify without samples still checks candidate points") {
  const auto tri = pmi::test::tri1();
  const auto r = solve(tri, q("1/10"), OracleKind::brute_force());
  const auto report = certify(r, tri, {0, 0, false, true});
  CHECK(report.samples == 0);
  CHECK(report.points_checked > 0);
  CHECK(report.passed());
}

TEST_CASE("certify catches an injected wrong strategy") {
  const auto tri = pmi::test::tri1();
  auto r = solve(tri, q("1/10"), OracleKind::brute_force());
  r.cells[0].strategies = {{make_strategy(tri, {1}), form("1", {"4"})}};
  const auto report = certify(r, tri, {100, 0, false, true});
  CHECK_FALSE(report.passed());
  bool at_zero = false;
  for (const auto& v : report.violations) {
    if (equal(v.lambda, pt({"0"}))) {
      at_zero = true;
      CHECK(v.certified == 1);
      CHECK(v.exact == 3);
    }
  }
  CHECK(at_zero);
}

TEST_CASE("certify catches a strategy whose stored form is inflated") {
  const auto tri = pmi::test::tri1();
  auto r = solve(tri, q("1/10"), OracleKind::brute_force());
  r.cells[0].strategies[0].strategy = make_strategy(tri, {1});
  CHECK_FALSE(certify(r, tri, {50, 0, false, false}).passed());
}

TEST_CASE("certify rejects a result for another instance") {
  const auto r = solve(pmi::test::tri1(), q("1/10"), OracleKind::brute_force());
  CHECK_THROWS_AS(certify(r, pmi::test::part1()), UsageError);
}

TEST_CASE("sample_point stays inside the polytope") {
  std::mt19937_64 rng(1);
  const auto tri = with_cache(Polytope<Rational>(pmi::test::triangle(1), 2));
  for (int i = 0; i < 200; ++i) {
    const auto x = sample_point(tri, rng);
    REQUIRE(x);
    CHECK(contains(tri, *x));
  }
}

TEST_CASE("per-cell envelope and basis stability on TRI1") {
  const auto tri = pmi::test::tri1();
  std::mt19937_64 rng(2);
  const auto r = solve(tri, q("1/10"), OracleKind::brute_force());
  for (const auto& cell : r.cells) {
    CHECK(check_cell_envelope(tri, cell.cell, 20, rng).passed);
    CHECK(check_basis_stability(tri, cell, 20, rng).passed);
  }
}

TEST_CASE("crossing points of two forms") {
  const auto cell = with_cache(Polytope<Rational>(pmi::test::interval(0, 2), 1));
  const auto xs = crossing_points(cell, {form("1", {"1"}), form("2", {"0"})});
  REQUIRE(xs.size() == 1);
  CHECK(equal(xs[0], pt({"1"})));
}
