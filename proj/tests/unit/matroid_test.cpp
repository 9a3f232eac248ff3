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

#include <random>
#include <vector>

#include "pmi/errors.hpp"
#include "pmi/instance.hpp"
#include "pmi/matroid.hpp"
#include "../support.hpp"

using namespace pmi;
using pmi::test::q;

namespace {

std::vector<int> subset_of(unsigned mask, int m) {
  std::vector<int> out;
  for (int e = 0; e < m; ++e) {
    if (mask & (1u << e)) out.push_back(e);
  }
  return out;
}

}  // namespace

TEST_CASE("independence examples") {
  const auto part = Matroid::partition({{0, 1}, {2, 3}}, {1, 1});
  const std::vector<int> one_each{0, 2}, same_part{0, 1};
  CHECK(is_independent(part, one_each));
  CHECK_FALSE(is_independent(part, same_part));

  const auto k3 = Matroid::graphic(3, {{0, 1}, {1, 2}, {2, 0}});
  const std::vector<int> cycle{0, 1, 2};
  CHECK_FALSE(is_independent(k3, cycle));
  const std::vector<int> out_of_range{0, 3};
  CHECK_THROWS_AS(is_independent(k3, out_of_range), InputError);
}

TEST_CASE("rank examples") {
  CHECK(rank(Matroid::partition({{0, 1}, {2, 3}}, {1, 1})) == 2);
  CHECK(rank(Matroid::graphic(3, {{0, 1}, {1, 2}, {2, 0}})) == 2);
  CHECK(rank(Matroid::uniform(3, 5)) == 3);
}

TEST_CASE("matroid factories reject malformed input") {
  CHECK_THROWS_AS(Matroid::uniform(4, 3), InputError);
  CHECK_THROWS_AS(Matroid::partition({{0, 1}, {1, 2}}, {1, 1}), InputError);
  CHECK_THROWS_AS(Matroid::partition({{0, 1}}, {1, 1}), InputError);
  CHECK_THROWS_AS(Matroid::graphic(2, {{0, 2}}), InputError);
}

TEST_CASE("min_weight_basis examples") {
  const auto inst = pmi::test::tri1();
  const Point lambda = pmi::test::pt({"1/4"});

  const auto all = min_weight_basis(inst, {}, lambda);
  CHECK(all.basis == std::vector<int>{0, 2});
  CHECK(all.value == 2);

  const std::vector<int> drop_e3{2};
  const auto rest = min_weight_basis(inst, drop_e3, lambda);
  CHECK(rest.basis == std::vector<int>{0, 1});
  CHECK(rest.value == q("13/4"));

  Instance uni;
  uni.matroid = Matroid::uniform(1, 2);
  uni.weights = {pmi::test::form("1", {"0"}), pmi::test::form("1", {"0"})};
  uni.ell = 1;
  uni.p = 1;
  uni.polytope = pmi::test::interval(0, 1);
  const auto tie = min_weight_basis(uni, {}, pmi::test::pt({"1/2"}));
  CHECK(tie.basis == std::vector<int>{0});
  CHECK(tie.value == 1);

  const std::vector<int> two{0, 1};
  CHECK_THROWS_AS(min_weight_basis(inst, two, lambda), InfeasibleError);
}

TEST_CASE("basis_value_form examples") {
  const auto inst = pmi::test::tri1();
  const std::vector<int> b23{1, 2}, b12{0, 1};
  CHECK(basis_value_form(inst, b23) == pmi::test::form("2", {"3"}));
  CHECK(basis_value_form(inst, b12) == pmi::test::form("3", {"1"}));
  const auto empty = basis_value_form(inst, {});
  CHECK(empty.is_zero());
}

TEST_CASE("greedy basis is optimal against enumeration of all bases") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 60; ++round) {
    const auto inst = round % 2 == 0 ? pmi::test::random_partition(rng, 9, 2, 1)
                                     : pmi::test::random_graphic(rng, 5, 1, 8, 1);
    const int m = inst.m();
    const int k = rank(inst.matroid);
    const Point lambda = pmi::test::pt({"3/2"});
    Rational best;
    bool found = false;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      const auto s = subset_of(mask, m);
      if (static_cast<int>(s.size()) != k || !is_independent(inst.matroid, s)) continue;
      Rational v = 0;
      for (int e : s) v += inst.weights[e](lambda);
      if (!found || v < best) best = v;
      found = true;
    }
    REQUIRE(found);
    CHECK(min_weight_basis(inst, {}, lambda).value == best);
  }
}

TEST_CASE("independence oracles satisfy the matroid axioms") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 12; ++round) {
    const auto inst = round % 2 == 0 ? pmi::test::random_partition(rng, 8, 1, 1)
                                     : pmi::test::random_graphic(rng, 5, 1, 8, 1);
    const int m = inst.m();
    std::vector<bool> indep(1u << m);
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      indep[mask] = is_independent(inst.matroid, subset_of(mask, m));
    }
    CHECK(indep[0]);
    for (unsigned a = 0; a < (1u << m); ++a) {
      if (!indep[a]) continue;
      // hereditary
      for (unsigned sub = a; sub; sub = (sub - 1) & a) CHECK(indep[sub]);
      // exchange
      for (unsigned b = 0; b < (1u << m); ++b) {
        if (!indep[b] || __builtin_popcount(b) <= __builtin_popcount(a)) continue;
        bool extends = false;
        for (int e = 0; e < m && !extends; ++e) {
          if ((b & (1u << e)) && !(a & (1u << e))) extends = indep[a | (1u << e)];
        }
        CHECK(extends);
      }
    }
  }
}

TEST_CASE("validate_instance examples") {
  CHECK(validate_instance(pmi::test::tri1()).passed());
  CHECK(validate_instance(pmi::test::part1()).passed());

  auto two = pmi::test::tri1();
  two.ell = 2;
  const auto ell_two = validate_instance(two);
  CHECK_FALSE(ell_two.passed());
  CHECK(ell_two.describe().find("FAIL  Assumption 1") != std::string::npos);
  auto three = pmi::test::tri1();
  three.ell = 3;
  CHECK_THROWS_AS(check_structure(three), InputError);

  auto negative = pmi::test::tri1();
  negative.weights[0].constant = -1;
  const auto report = validate_instance(negative);
  CHECK_FALSE(report.passed());
  CHECK(report.describe().find("FAIL  Assumption 3") != std::string::npos);

  auto zeros = pmi::test::tri1();
  zeros.weights[0].constant = 0;
  CHECK_FALSE(validate_instance(zeros).passed());

  auto open = pmi::test::tri1();
  open.polytope.pop_back();
  CHECK_FALSE(validate_instance(open).passed());

  auto negative_region = pmi::test::tri1();
  negative_region.polytope = pmi::test::interval(-1, 2);
  CHECK_FALSE(validate_instance(negative_region).passed());
}

TEST_CASE("assumption 1 fails when removal disconnects the graph") {
  Instance inst = pmi::test::tri1();
  inst.matroid = Matroid::graphic(3, {{0, 1}, {1, 2}, {0, 1}});
  const auto report = validate_instance(inst);
  CHECK_FALSE(report.passed());
  CHECK(report.describe().find("FAIL  Assumption 1") != std::string::npos);
}

TEST_CASE("fingerprint depends on content only") {
  const auto a = instance_fingerprint(pmi::test::tri1());
  CHECK(a.size() == 16);
  CHECK(a == instance_fingerprint(pmi::test::tri1()));
  CHECK(a != instance_fingerprint(pmi::test::part1()));
}
