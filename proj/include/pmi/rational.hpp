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

#ifndef PMI_RATIONAL_HPP
#define PMI_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <string>
#include <string_view>
#include <vector>

namespace pmi {

/// Exact rational scalar. Expression templates are disabled so that values
/// compose cleanly inside Eigen expressions.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Index = Eigen::Index;

/// A point of the parameter space (or of the lifted (λ, z) space).
using Point = Vector<Rational>;

/// Parses "num/den" or an integer literal. Throws InputError on anything else,
/// including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "num/den", or "num" when the denominator is one.
std::string to_string(const Rational& value);

/// Parses a comma separated list of rationals.
Point parse_point(std::string_view text);

/// "(a, b, ...)"
std::string to_string(const Point& point);

/// Exact lexicographic order on points of equal dimension.
struct PointLess {
  template <typename A, typename B>
  bool operator()(const A& a, const B& b) const {
    for (Index i = 0; i < a.size() && i < b.size(); ++i) {
      if (a[i] < b[i]) return true;
      if (b[i] < a[i]) return false;
    }
    return a.size() < b.size();
  }
};

inline bool equal(const Point& a, const Point& b) {
  return a.size() == b.size() && (a.size() == 0 || a == b);
}

}  // namespace pmi

#endif  // PMI_RATIONAL_HPP
