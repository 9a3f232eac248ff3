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

#ifndef PMI_AFFINE_FORM_HPP
#define PMI_AFFINE_FORM_HPP

#include <Eigen/Dense>

#include "pmi/rational.hpp"

namespace pmi {

/// An affine function x -> constant + <gradient, x>.
///
/// Element weights, basis values, hyperplanes and half-space constraints
/// (read as form(x) >= 0) are all represented by this one type.
template <typename Scalar>
struct AffineForm {
  Scalar constant{0};
  Vector<Scalar> gradient;

  AffineForm() = default;
  explicit AffineForm(Index dim) : constant(0), gradient(Vector<Scalar>::Zero(dim)) {}
  AffineForm(Scalar c, Vector<Scalar> g) : constant(std::move(c)), gradient(std::move(g)) {}

  Index dim() const { return gradient.size(); }

  template <typename Derived>
  Scalar operator()(const Eigen::MatrixBase<Derived>& x) const {
    eigen_assert(x.size() == gradient.size());
    Scalar value = constant;
    for (Index i = 0; i < gradient.size(); ++i) value += gradient[i] * x[i];
    return value;
  }

  bool has_zero_gradient() const {
    for (Index i = 0; i < gradient.size(); ++i) {
      if (gradient[i] != 0) return false;
    }
    return true;
  }

  bool is_zero() const { return constant == 0 && has_zero_gradient(); }

  AffineForm& operator+=(const AffineForm& other) {
    constant += other.constant;
    gradient += other.gradient;
    return *this;
  }
  AffineForm& operator-=(const AffineForm& other) {
    constant -= other.constant;
    gradient -= other.gradient;
    return *this;
  }

  friend AffineForm operator+(AffineForm a, const AffineForm& b) { return a += b; }
  friend AffineForm operator-(AffineForm a, const AffineForm& b) { return a -= b; }
  friend AffineForm operator-(const AffineForm& a) { return AffineForm(-a.constant, -a.gradient); }
  friend AffineForm operator*(const Scalar& s, const AffineForm& a) {
    return AffineForm(s * a.constant, a.gradient * s);
  }

  friend bool operator==(const AffineForm& a, const AffineForm& b) {
    return a.constant == b.constant && a.gradient.size() == b.gradient.size() &&
           (a.gradient.size() == 0 || a.gradient == b.gradient);
  }
};

/// Divides by the absolute value of the first nonzero gradient entry. Two
/// half-spaces {f >= 0} coincide iff their normalized forms are equal.
template <typename Scalar>
AffineForm<Scalar> normalize_halfspace(const AffineForm<Scalar>& form) {
  for (Index i = 0; i < form.dim(); ++i) {
    if (form.gradient[i] != 0) {
      const Scalar scale = 1 / abs(form.gradient[i]);
      return scale * form;
    }
  }
  return form;
}

/// Scales so that the first nonzero gradient entry equals one. Two
/// hyperplanes {f = 0} coincide iff their normalized forms are equal.
template <typename Scalar>
AffineForm<Scalar> normalize_hyperplane(const AffineForm<Scalar>& form) {
  for (Index i = 0; i < form.dim(); ++i) {
    if (form.gradient[i] != 0) {
      const Scalar scale = 1 / form.gradient[i];
      return scale * form;
    }
  }
  return form;
}

/// Strict lexicographic order on (gradient, constant); used to deduplicate.
template <typename Scalar>
struct AffineFormLess {
  bool operator()(const AffineForm<Scalar>& a, const AffineForm<Scalar>& b) const {
    for (Index i = 0; i < a.dim() && i < b.dim(); ++i) {
      if (a.gradient[i] < b.gradient[i]) return true;
      if (b.gradient[i] < a.gradient[i]) return false;
    }
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.constant < b.constant;
  }
};

using RationalForm = AffineForm<Rational>;

}  // namespace pmi

#endif  // PMI_AFFINE_FORM_HPP
