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

// Command-line front end.
//
// Exit codes: 0 success, 1 semantic failure (assumption violated, λ outside
// the parameter polytope, certificate violated), 2 input or usage error.

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pmi/errors.hpp"
#include "pmi/framework.hpp"
#include "pmi/io.hpp"
#include "pmi/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInputError = 2;

int cmd_validate(const std::string& instance_path) {
  const auto instance = pmi::parse_instance(pmi::read_file(instance_path));
  const auto report = pmi::validate_instance(instance);
  std::cout << report.describe();
  return report.passed() ? kOk : kFailure;
}

struct SolveArgs {
  std::string instance_path;
  std::string epsilon = "1/10";
  std::string oracle = "brute";
  std::string output;
  bool exact_requery = false;
  std::size_t parallel = 1;
};

int cmd_solve(const SolveArgs& args) {
  const auto instance = pmi::parse_instance(pmi::read_file(args.instance_path));
  const auto epsilon = pmi::parse_rational(args.epsilon);
  if (!(epsilon > 0 && epsilon < 1)) throw pmi::UsageError("epsilon must satisfy 0 < epsilon < 1");
  const auto oracle = pmi::OracleKind::parse(args.oracle);
  pmi::ApproximationResult result;
  try {
    result = pmi::solve(instance, epsilon, oracle, {args.parallel, args.exact_requery});
  } catch (const pmi::ValidationError& e) {
    std::cerr << e.what();
    return kFailure;
  }
  const auto text = pmi::serialize_result(result);
  if (args.output.empty() || args.output == "-") {
    std::cout << text;
  } else {
    pmi::write_file(args.output, text);
  }
  std::ostream& log = args.output.empty() || args.output == "-" ? std::cerr : std::cout;
  log << "cells: " << result.metadata.cells << ", hyperplanes: " << result.metadata.hyperplanes
      << ", distinct strategies: " << result.metadata.distinct_strategies
      << ", oracle calls: " << result.metadata.oracle_calls << ", wall time: " << std::fixed
      << std::setprecision(3) << result.metadata.wall_seconds << " s\n";
  return kOk;
}

int cmd_query(const std::string& result_path, const std::string& instance_path,
              const std::string& lambda_text) {
  const auto result = pmi::parse_result(pmi::read_file(result_path));
  const auto instance = pmi::parse_instance(pmi::read_file(instance_path));
  if (result.fingerprint != pmi::instance_fingerprint(instance)) {
    throw pmi::UsageError("result was computed for a different instance");
  }
  const auto lambda = pmi::parse_point(lambda_text);
  try {
    const auto answer = pmi::query(result, instance, lambda);
    std::cout << "remove " << pmi::to_string(answer.strategy) << "; value "
              << pmi::to_string(answer.value) << "; cell " << answer.cell_index << '\n';
  } catch (const pmi::DomainError& e) {
    std::cerr << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

struct VerifyArgs {
  std::string result_path;
  std::string instance_path;
  std::size_t samples = 500;
  std::uint64_t seed = 0;
  bool exhaustive = false;
};

int cmd_verify(const VerifyArgs& args) {
  const auto result = pmi::parse_result(pmi::read_file(args.result_path));
  const auto instance = pmi::parse_instance(pmi::read_file(args.instance_path));
  const auto report =
      pmi::certify(result, instance, {args.samples, args.seed, args.exhaustive, true});
  std::cout << "samples: " << report.samples << " (seed " << report.seed << ")\n"
            << "points checked: " << report.points_checked << '\n'
            << "required ratio: " << pmi::to_string(report.required_ratio) << '\n'
            << "min ratio: " << (report.min_ratio ? pmi::to_string(*report.min_ratio) : "n/a")
            << '\n'
            << "violations: " << report.violations.size() << '\n';
  for (const auto& v : report.violations) {
    std::cout << "  at " << pmi::to_string(v.lambda) << ": certified " << pmi::to_string(v.certified)
              << ", exact " << pmi::to_string(v.exact) << '\n';
  }
  std::cout << "coverage failures: " << report.coverage_failures.size() << '\n';
  for (const auto& x : report.coverage_failures) std::cout << "  " << pmi::to_string(x) << '\n';
  for (const auto& inv : report.invariants) {
    std::cout << (inv.passed ? "ok    " : "FAIL  ") << inv.name;
    if (!inv.detail.empty()) std::cout << ": " << inv.detail;
    std::cout << '\n';
  }
  std::cout << (report.passed() ? "PASS" : "FAIL") << '\n';
  return report.passed() ? kOk : kFailure;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join_removed(const pmi::Strategy& s) {
  std::string out;
  for (std::size_t i = 0; i < s.removed.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(s.removed[i]);
  }
  return out;
}

int cmd_export(const std::string& result_path, const std::string& format) {
  const auto result = pmi::parse_result(pmi::read_file(result_path));
  const auto records = pmi::envelope_export(result);
  const pmi::Index p = result.cells.empty() ? 1 : result.cells.front().cell.polytope.dim();

  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  if (p == 1) {
    header = {"cell_id", "lambda_from", "lambda_to", "strategy", "constant", "slope", "breakpoints"};
  } else {
    header = {"cell_id", "vertices", "strategy", "constant"};
    for (pmi::Index i = 0; i < p; ++i) header.push_back("slope_" + std::to_string(i + 1));
  }
  for (const auto& r : records) {
    std::string vertices;
    for (const auto& v : r.vertices) {
      if (!vertices.empty()) vertices += ';';
      vertices += pmi::to_string(v);
    }
    std::string breaks;
    for (const auto& b : r.breakpoints) {
      if (!breaks.empty()) breaks += ';';
      breaks += pmi::to_string(b);
    }
    for (const auto& f : r.forms) {
      std::vector<std::string> row{std::to_string(r.cell_index)};
      if (p == 1) {
        row.push_back(pmi::to_string(r.vertices.front()[0]));
        row.push_back(pmi::to_string(r.vertices.back()[0]));
      } else {
        row.push_back(vertices);
      }
      row.push_back(join_removed(f.strategy));
      row.push_back(pmi::to_string(f.value_form.constant));
      for (pmi::Index i = 0; i < p; ++i) row.push_back(pmi::to_string(f.value_form.gradient[i]));
      if (p == 1) row.push_back(breaks);
      rows.push_back(std::move(row));
    }
  }

  if (format == "csv") {
    auto emit = [](const std::vector<std::string>& row) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) std::cout << ',';
        std::cout << csv_field(row[i]);
      }
      std::cout << '\n';
    };
    emit(header);
    for (const auto& row : rows) emit(row);
  } else {
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    auto emit = [&](const std::vector<std::string>& row) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        line += row[i];
        if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
      }
      std::cout << line << '\n';
    };
    emit(header);
    for (const auto& row : rows) emit(row);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximation of multi-parametric matroid interdiction"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string result_path;

  auto* validate = app.add_subcommand("validate", "Check an instance against the assumptions");
  validate->add_option("instance", instance_path, "Instance file")->required();

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Compute a (1-eps)*beta approximation");
  solve->add_option("instance", solve_args.instance_path, "Instance file")->required();
  solve->add_option("--epsilon", solve_args.epsilon, "Rational 0 < eps < 1")->capture_default_str();
  solve->add_option("--oracle", solve_args.oracle, "brute | partition-dp | synthetic:<beta>")
      ->capture_default_str();
  solve->add_option("--output,-o", solve_args.output, "Result file (stdout if omitted)");
  solve->add_flag("--exact-requery", solve_args.exact_requery,
                  "Queries recompute y_F at the query point");
  solve->add_option("--parallel", solve_args.parallel, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string lambda_text;
  auto* query = app.add_subcommand("query", "Look up the strategy for a parameter vector");
  query->add_option("result", result_path, "Result file")->required();
  query->add_option("instance", instance_path, "Instance file")->required();
  query->add_option("--lambda", lambda_text, "Comma separated rationals")->required();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Certify a result against exact values");
  verify->add_option("result", verify_args.result_path, "Result file")->required();
  verify->add_option("instance", verify_args.instance_path, "Instance file")->required();
  verify->add_option("--samples", verify_args.samples, "Random sample points")->capture_default_str();
  verify->add_option("--seed", verify_args.seed, "Sampling seed")->capture_default_str();
  verify->add_flag("--exhaustive", verify_args.exhaustive, "Check every envelope vertex");

  std::string format = "csv";
  auto* exporter = app.add_subcommand("export", "Print per-cell value forms for plotting");
  exporter->add_option("result", result_path, "Result file")->required();
  exporter->add_option("--format", format, "csv | table")
      ->check(CLI::IsMember({"csv", "table"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*validate) return cmd_validate(instance_path);
    if (*solve) return cmd_solve(solve_args);
    if (*query) return cmd_query(result_path, instance_path, lambda_text);
    if (*verify) return cmd_verify(verify_args);
    if (*exporter) return cmd_export(result_path, format);
  } catch (const pmi::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const pmi::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kInputError;
  } catch (const pmi::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kInputError;
}
