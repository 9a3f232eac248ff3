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

#include "pmi/io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "pmi/errors.hpp"

namespace pmi {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kFormatVersion = 1;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw InputError(path + ": " + message);
}

void expect_keys(const Json& j, const std::string& path, std::initializer_list<const char*> keys) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) fail(path, "unknown field '" + key + "'");
  }
}

const Json& field(const Json& j, const std::string& path, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

const Json& array_field(const Json& j, const std::string& path, const char* key) {
  const Json& a = field(j, path, key);
  if (!a.is_array()) fail(path + "." + key, "expected an array");
  return a;
}

int int_value(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

std::size_t count_value(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned()) fail(path, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

Rational rational_value(const Json& j, const std::string& path) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
  } catch (const InputError& e) {
    fail(path, e.what());
  }
  fail(path, "expected a rational string");
}

Point point_value(const Json& j, const std::string& path, Index dim) {
  if (!j.is_array() || static_cast<Index>(j.size()) != dim) {
    fail(path, "expected an array of " + std::to_string(dim) + " rationals");
  }
  Point x(dim);
  for (Index i = 0; i < dim; ++i) {
    x[i] = rational_value(j[static_cast<std::size_t>(i)], path + "[" + std::to_string(i) + "]");
  }
  return x;
}

std::vector<int> int_list(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(int_value(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Json point_json(const Point& x) {
  Json out = Json::array();
  for (Index i = 0; i < x.size(); ++i) out.push_back(to_string(x[i]));
  return out;
}

Json halfspace_json(const RationalForm& form) {
  Json out;
  out["gradient"] = point_json(form.gradient);
  out["constant"] = to_string(form.constant);
  out["sense"] = "ge";
  return out;
}

RationalForm halfspace_value(const Json& j, const std::string& path, Index dim) {
  expect_keys(j, path, {"gradient", "constant", "sense"});
  const Json& sense = field(j, path, "sense");
  if (sense != "ge") fail(path + ".sense", "only \"ge\" is supported");
  return RationalForm(rational_value(field(j, path, "constant"), path + ".constant"),
                      point_value(field(j, path, "gradient"), path + ".gradient", dim));
}

Json form_json(const RationalForm& form) {
  Json out;
  out["constant"] = to_string(form.constant);
  out["gradient"] = point_json(form.gradient);
  return out;
}

RationalForm form_value(const Json& j, const std::string& path, Index dim) {
  expect_keys(j, path, {"constant", "gradient"});
  return RationalForm(rational_value(field(j, path, "constant"), path + ".constant"),
                      point_value(field(j, path, "gradient"), path + ".gradient", dim));
}

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

void check_version(const Json& doc) {
  if (int_value(field(doc, "$", "format_version"), "$.format_version") != kFormatVersion) {
    fail("$.format_version", "unsupported version");
  }
}

Matroid matroid_value(const Json& j, int m) {
  const std::string path = "$.matroid";
  const Json& kind = field(j, path, "kind");
  if (kind == "uniform") {
    expect_keys(j, path, {"kind", "k"});
    return Matroid::uniform(int_value(field(j, path, "k"), path + ".k"), m);
  }
  if (kind == "partition") {
    expect_keys(j, path, {"kind", "parts", "capacities"});
    const Json& parts = array_field(j, path, "parts");
    std::vector<std::vector<int>> lists;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      lists.push_back(int_list(parts[i], path + ".parts[" + std::to_string(i) + "]"));
    }
    return Matroid::partition(std::move(lists),
                              int_list(field(j, path, "capacities"), path + ".capacities"));
  }
  if (kind == "graphic") {
    expect_keys(j, path, {"kind", "nodes", "edges"});
    const Json& edges = array_field(j, path, "edges");
    std::vector<std::pair<int, int>> list;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto ends = int_list(edges[i], path + ".edges[" + std::to_string(i) + "]");
      if (ends.size() != 2) fail(path + ".edges[" + std::to_string(i) + "]", "expected [u, v]");
      list.emplace_back(ends[0], ends[1]);
    }
    return Matroid::graphic(int_value(field(j, path, "nodes"), path + ".nodes"), std::move(list));
  }
  fail(path + ".kind", "expected \"uniform\", \"partition\" or \"graphic\"");
}

Json matroid_json(const Matroid& matroid) {
  Json out;
  if (const auto* u = matroid.as_uniform()) {
    out["kind"] = "uniform";
    out["k"] = u->k;
  } else if (const auto* part = matroid.as_partition()) {
    out["kind"] = "partition";
    out["parts"] = part->parts;
    out["capacities"] = part->capacities;
  } else {
    const auto* graph = matroid.as_graphic();
    out["kind"] = "graphic";
    out["nodes"] = graph->nodes;
    Json edges = Json::array();
    for (const auto& [u, v] : graph->edges) edges.push_back({u, v});
    out["edges"] = std::move(edges);
  }
  return out;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const Json doc = parse_document(text);
  expect_keys(doc, "$", {"format_version", "matroid", "p", "ell", "weights", "polytope"});
  check_version(doc);
  Instance instance;
  instance.p = int_value(field(doc, "$", "p"), "$.p");
  if (instance.p < 1) fail("$.p", "must be positive");
  instance.ell = int_value(field(doc, "$", "ell"), "$.ell");

  const Json& weights = array_field(doc, "$", "weights");
  for (std::size_t e = 0; e < weights.size(); ++e) {
    const std::string path = "$.weights[" + std::to_string(e) + "]";
    expect_keys(weights[e], path, {"a", "b"});
    instance.weights.emplace_back(rational_value(field(weights[e], path, "a"), path + ".a"),
                                  point_value(field(weights[e], path, "b"), path + ".b", instance.p));
  }
  const Json& polytope = array_field(doc, "$", "polytope");
  for (std::size_t j = 0; j < polytope.size(); ++j) {
    instance.polytope.push_back(
        halfspace_value(polytope[j], "$.polytope[" + std::to_string(j) + "]", instance.p));
  }
  instance.matroid = matroid_value(field(doc, "$", "matroid"), static_cast<int>(weights.size()));
  check_structure(instance);
  return instance;
}

std::string serialize_instance(const Instance& instance) {
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["matroid"] = matroid_json(instance.matroid);
  doc["p"] = instance.p;
  doc["ell"] = instance.ell;
  Json weights = Json::array();
  for (const auto& w : instance.weights) {
    Json entry;
    entry["a"] = to_string(w.constant);
    entry["b"] = point_json(w.gradient);
    weights.push_back(std::move(entry));
  }
  doc["weights"] = std::move(weights);
  Json polytope = Json::array();
  for (const auto& g : instance.polytope) polytope.push_back(halfspace_json(g));
  doc["polytope"] = std::move(polytope);
  return doc.dump(2) + "\n";
}

std::string serialize_result(const ApproximationResult& result) {
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["fingerprint"] = result.fingerprint;
  doc["epsilon"] = to_string(result.epsilon);
  doc["beta"] = to_string(result.beta);
  doc["oracle"] = to_string(result.oracle);
  doc["exact_requery"] = result.exact_requery;
  doc["p"] = result.cells.empty() ? 0 : result.cells.front().cell.polytope.dim();
  Json cells = Json::array();
  for (const auto& c : result.cells) {
    Json cell;
    Json constraints = Json::array();
    for (const auto& g : c.cell.polytope.constraints()) constraints.push_back(halfspace_json(g));
    cell["constraints"] = std::move(constraints);
    Json vertices = Json::array();
    for (const auto& v : c.cell.polytope.vertices()) vertices.push_back(point_json(v));
    cell["vertices"] = std::move(vertices);
    cell["interior_point"] = point_json(c.cell.interior_point);
    cell["sign_vector"] = c.cell.sign_vector;
    cell["anchor"] = point_json(c.anchor);
    Json strategies = Json::array();
    for (const auto& s : c.strategies) {
      Json entry;
      entry["removed"] = s.strategy.removed;
      entry["value_form"] = form_json(s.value_form);
      strategies.push_back(std::move(entry));
    }
    cell["strategies"] = std::move(strategies);
    cell["oracle_calls"] = c.oracle_calls;
    cell["iterations"] = c.iterations;
    cells.push_back(std::move(cell));
  }
  doc["cells"] = std::move(cells);
  Json meta;
  meta["hyperplanes"] = result.metadata.hyperplanes;
  meta["cells"] = result.metadata.cells;
  meta["oracle_calls"] = result.metadata.oracle_calls;
  meta["distinct_strategies"] = result.metadata.distinct_strategies;
  doc["metadata"] = std::move(meta);
  return doc.dump(2) + "\n";
}

ApproximationResult parse_result(std::string_view text) {
  const Json doc = parse_document(text);
  expect_keys(doc, "$", {"format_version", "fingerprint", "epsilon", "beta", "oracle",
                         "exact_requery", "p", "cells", "metadata"});
  check_version(doc);
  ApproximationResult result;
  const Json& fingerprint = field(doc, "$", "fingerprint");
  if (!fingerprint.is_string()) fail("$.fingerprint", "expected a string");
  result.fingerprint = fingerprint.get<std::string>();
  result.epsilon = rational_value(field(doc, "$", "epsilon"), "$.epsilon");
  result.beta = rational_value(field(doc, "$", "beta"), "$.beta");
  const Json& oracle = field(doc, "$", "oracle");
  if (!oracle.is_string()) fail("$.oracle", "expected a string");
  try {
    result.oracle = OracleKind::parse(oracle.get<std::string>());
  } catch (const UsageError& e) {
    fail("$.oracle", e.what());
  }
  const Json& requery = field(doc, "$", "exact_requery");
  if (!requery.is_boolean()) fail("$.exact_requery", "expected a boolean");
  result.exact_requery = requery.get<bool>();
  const Index p = int_value(field(doc, "$", "p"), "$.p");

  const Json& cells = array_field(doc, "$", "cells");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string path = "$.cells[" + std::to_string(i) + "]";
    const Json& c = cells[i];
    expect_keys(c, path, {"constraints", "vertices", "interior_point", "sign_vector", "anchor",
                          "strategies", "oracle_calls", "iterations"});
    std::vector<RationalForm> constraints;
    const Json& cj = array_field(c, path, "constraints");
    for (std::size_t j = 0; j < cj.size(); ++j) {
      constraints.push_back(halfspace_value(cj[j], path + ".constraints[" + std::to_string(j) + "]", p));
    }
    std::vector<Point> vertices;
    const Json& vj = array_field(c, path, "vertices");
    for (std::size_t j = 0; j < vj.size(); ++j) {
      vertices.push_back(point_value(vj[j], path + ".vertices[" + std::to_string(j) + "]", p));
    }
    CellSolution sol;
    sol.cell.interior_point = point_value(field(c, path, "interior_point"), path + ".interior_point", p);
    sol.cell.polytope = Polytope<Rational>(std::move(constraints), p, std::move(vertices),
                                           sol.cell.interior_point);
    sol.cell.sign_vector = int_list(field(c, path, "sign_vector"), path + ".sign_vector");
    sol.anchor = point_value(field(c, path, "anchor"), path + ".anchor", p);
    const Json& sj = array_field(c, path, "strategies");
    for (std::size_t j = 0; j < sj.size(); ++j) {
      const std::string spath = path + ".strategies[" + std::to_string(j) + "]";
      expect_keys(sj[j], spath, {"removed", "value_form"});
      sol.strategies.push_back(
          {Strategy{int_list(field(sj[j], spath, "removed"), spath + ".removed")},
           form_value(field(sj[j], spath, "value_form"), spath + ".value_form", p)});
    }
    sol.epsilon = result.epsilon;
    sol.beta = result.beta;
    sol.oracle_calls = count_value(field(c, path, "oracle_calls"), path + ".oracle_calls");
    sol.iterations = count_value(field(c, path, "iterations"), path + ".iterations");
    result.cells.push_back(std::move(sol));
  }

  const Json& meta = field(doc, "$", "metadata");
  expect_keys(meta, "$.metadata", {"hyperplanes", "cells", "oracle_calls", "distinct_strategies"});
  result.metadata.hyperplanes = count_value(field(meta, "$.metadata", "hyperplanes"), "$.metadata.hyperplanes");
  result.metadata.cells = count_value(field(meta, "$.metadata", "cells"), "$.metadata.cells");
  result.metadata.oracle_calls =
      count_value(field(meta, "$.metadata", "oracle_calls"), "$.metadata.oracle_calls");
  result.metadata.distinct_strategies = count_value(
      field(meta, "$.metadata", "distinct_strategies"), "$.metadata.distinct_strategies");
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << contents;
  if (!out) throw InputError("failed writing '" + path + "'");
}

}  // namespace pmi
