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

#include "pmi/rational.hpp"

#include <cctype>

#include "pmi/errors.hpp"

namespace pmi {
namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Strips sign and leading zeros; Boost would read a leading zero as octal.
std::string decimal_digits(std::string_view s, bool& negative) {
  negative = !s.empty() && s.front() == '-';
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return std::string(s);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw InputError("invalid rational literal '" + std::string(text) + "'");
  }
  using boost::multiprecision::mpz_int;
  bool negative = false;
  bool unused = false;
  mpz_int n(decimal_digits(num, negative));
  if (negative) n = -n;
  const mpz_int d(decimal_digits(den, unused));
  if (d == 0) throw InputError("zero denominator in rational literal '" + std::string(text) + "'");
  return Rational(n, d);
}

std::string to_string(const Rational& value) { return value.str(); }

Point parse_point(std::string_view text) {
  std::vector<Rational> coords;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    coords.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  Point p(static_cast<Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) p[static_cast<Index>(i)] = coords[i];
  return p;
}

std::string to_string(const Point& point) {
  std::string out = "(";
  for (Index i = 0; i < point.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(point[i]);
  }
  return out + ")";
}

}  // namespace pmi
