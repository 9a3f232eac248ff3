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

#ifndef PMI_GEOMETRY_HPP
#define PMI_GEOMETRY_HPP

// Exact polyhedral geometry over an ordered field.
//
// Polyhedra are kept in H-representation as a list of affine forms read as
// form(x) >= 0. Vertices are found by solving every dim-subset of
// constraints exactly, which is adequate for the small dimensions (p <= 3)
// the solver works in. Scalar must be an exact field; floating point types
// compile but give no guarantees.

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pmi/affine_form.hpp"
#include "pmi/combinatorics.hpp"
#include "pmi/errors.hpp"
#include "pmi/rational.hpp"

namespace pmi {

template <typename Scalar>
struct Hyperplane {
  AffineForm<Scalar> form;
};

namespace linalg {

/// Gauss-Jordan elimination in place; returns the pivot columns.
template <typename Scalar>
std::vector<Index> reduce_to_rref(Matrix<Scalar>& a) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index pivot = row;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) a.row(pivot).swap(a.row(row));
    const Scalar inv = 1 / a(row, col);
    for (Index c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (Index r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Scalar factor = a(r, col);
      for (Index c = col; c < a.cols(); ++c) a(r, c) -= factor * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Scalar>
Index rank(Matrix<Scalar> a) {
  return static_cast<Index>(reduce_to_rref(a).size());
}

/// Unique solution of the square system a x = b, or nullopt if singular.
template <typename Scalar>
std::optional<Vector<Scalar>> solve_unique(const Matrix<Scalar>& a, const Vector<Scalar>& b) {
  const Index n = a.cols();
  Matrix<Scalar> aug(a.rows(), n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  const auto pivots = reduce_to_rref(aug);
  if (static_cast<Index>(pivots.size()) != n || (n > 0 && pivots.back() != n - 1)) {
    return std::nullopt;
  }
  return Vector<Scalar>(aug.col(n).head(n));
}

/// A spanning vector of ker(a) when the kernel is one-dimensional.
template <typename Scalar>
std::optional<Vector<Scalar>> null_vector(Matrix<Scalar> a) {
  const Index n = a.cols();
  const auto pivots = reduce_to_rref(a);
  if (static_cast<Index>(pivots.size()) != n - 1) return std::nullopt;
  Index free_col = n - 1;
  for (Index i = 0; i < static_cast<Index>(pivots.size()); ++i) {
    if (pivots[static_cast<std::size_t>(i)] != i) {
      free_col = i;
      break;
    }
  }
  Vector<Scalar> d = Vector<Scalar>::Zero(n);
  d[free_col] = 1;
  for (Index i = 0; i < static_cast<Index>(pivots.size()); ++i) {
    d[pivots[static_cast<std::size_t>(i)]] = -a(i, free_col);
  }
  return d;
}

}  // namespace linalg

/// H-polyhedron { x : form(x) >= 0 for every constraint }.
///
/// Bounded polytopes carry their vertex set and an interior point once built
/// through with_cache(). A lifted polyhedron may be unbounded along one
/// designated upward axis; it then carries vertices but no interior point.
template <typename Scalar>
class Polytope {
 public:
  using Form = AffineForm<Scalar>;
  using Pt = Vector<Scalar>;

  Polytope() = default;

  Polytope(std::vector<Form> constraints, Index dim,
           std::optional<Index> upward_axis = std::nullopt)
      : constraints_(std::move(constraints)), dim_(dim), upward_axis_(upward_axis) {
    for (const auto& c : constraints_) {
      if (c.dim() != dim_) throw InputError("constraint dimension does not match polytope");
    }
  }

  /// Adopts precomputed caches without re-deriving them.
  Polytope(std::vector<Form> constraints, Index dim, std::vector<Pt> vertices,
           std::optional<Pt> interior, std::optional<Index> upward_axis = std::nullopt)
      : Polytope(std::move(constraints), dim, upward_axis) {
    vertices_ = std::move(vertices);
    interior_ = std::move(interior);
  }

  const std::vector<Form>& constraints() const { return constraints_; }
  Index dim() const { return dim_; }
  std::optional<Index> upward_axis() const { return upward_axis_; }

  bool has_vertex_cache() const { return vertices_.has_value(); }
  const std::vector<Pt>& vertices() const {
    if (!vertices_) throw std::logic_error("polytope has no vertex cache");
    return *vertices_;
  }
  const std::optional<Pt>& interior() const { return interior_; }

 private:
  std::vector<Form> constraints_;
  Index dim_ = 0;
  std::optional<Index> upward_axis_;
  std::optional<std::vector<Pt>> vertices_;
  std::optional<Pt> interior_;
};

template <typename Scalar, typename Derived>
bool contains(const Polytope<Scalar>& poly, const Eigen::MatrixBase<Derived>& x) {
  if (x.size() != poly.dim()) throw InputError("point dimension does not match polytope");
  return std::all_of(poly.constraints().begin(), poly.constraints().end(),
                     [&](const auto& c) { return c(x) >= 0; });
}

template <typename Scalar, typename Derived>
bool strictly_contains(const Polytope<Scalar>& poly, const Eigen::MatrixBase<Derived>& x) {
  if (x.size() != poly.dim()) throw InputError("point dimension does not match polytope");
  return std::all_of(poly.constraints().begin(), poly.constraints().end(),
                     [&](const auto& c) { return c(x) > 0; });
}

template <typename Scalar>
struct VertexEnumeration {
  std::vector<Vector<Scalar>> vertices;  // lexicographically sorted
  std::vector<Vector<Scalar>> rays;      // extreme rays, normalized
};

namespace detail {

template <typename Scalar>
Matrix<Scalar> gradient_rows(std::span<const AffineForm<Scalar>> constraints,
                             std::span<const int> rows, Index dim) {
  Matrix<Scalar> a(static_cast<Index>(rows.size()), dim);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    a.row(static_cast<Index>(r)) =
        constraints[static_cast<std::size_t>(rows[r])].gradient.transpose();
  }
  return a;
}

template <typename Scalar>
Vector<Scalar> normalize_direction(Vector<Scalar> d) {
  for (Index i = 0; i < d.size(); ++i) {
    if (d[i] != 0) {
      const Scalar scale = 1 / abs(d[i]);
      for (Index j = 0; j < d.size(); ++j) d[j] *= scale;
      break;
    }
  }
  return d;
}

}  // namespace detail

/// All vertices and extreme rays of { x : c(x) >= 0 }.
///
/// Throws UnboundedError when the recession cone contains anything other
/// than the nonnegative ray along `upward_axis` (or anything at all when no
/// axis is designated). An empty result means the polyhedron is empty.
template <typename Scalar>
VertexEnumeration<Scalar> enumerate_vertices(std::span<const AffineForm<Scalar>> constraints,
                                             Index dim,
                                             std::optional<Index> upward_axis = std::nullopt) {
  using Pt = Vector<Scalar>;
  const int n = static_cast<int>(constraints.size());
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  if (linalg::rank(detail::gradient_rows<Scalar>(constraints, all, dim)) < dim) {
    throw UnboundedError("polyhedron contains a line");
  }

  std::set<Pt, PointLess> rays;
  for_each_combination(n, static_cast<int>(dim - 1), [&](std::span<const int> rows) {
    auto d = linalg::null_vector<Scalar>(detail::gradient_rows<Scalar>(constraints, rows, dim));
    if (!d) return;
    bool nonneg = true;
    bool nonpos = true;
    for (const auto& c : constraints) {
      const Scalar s = c.gradient.dot(*d);
      if (s < 0) nonneg = false;
      if (s > 0) nonpos = false;
    }
    if (nonneg) rays.insert(detail::normalize_direction<Scalar>(*d));
    if (nonpos) rays.insert(detail::normalize_direction<Scalar>(Pt(-*d)));
  });
  for (const auto& r : rays) {
    bool allowed = false;
    if (upward_axis) {
      Pt up = Pt::Zero(dim);
      up[*upward_axis] = 1;
      allowed = r == up;
    }
    if (!allowed) throw UnboundedError("polyhedron is unbounded along " + to_string(r));
  }

  std::set<Pt, PointLess> vertices;
  for_each_combination(n, static_cast<int>(dim), [&](std::span<const int> rows) {
    Vector<Scalar> rhs(dim);
    for (Index i = 0; i < dim; ++i) {
      rhs[i] = -constraints[static_cast<std::size_t>(rows[static_cast<std::size_t>(i)])].constant;
    }
    auto x = linalg::solve_unique<Scalar>(detail::gradient_rows<Scalar>(constraints, rows, dim),
                                          rhs);
    if (!x) return;
    for (const auto& c : constraints) {
      if (c(*x) < 0) return;
    }
    vertices.insert(std::move(*x));
  });

  return {std::vector<Pt>(vertices.begin(), vertices.end()),
          std::vector<Pt>(rays.begin(), rays.end())};
}

template <typename Scalar>
std::vector<Vector<Scalar>> enumerate_vertices(const Polytope<Scalar>& poly) {
  if (poly.has_vertex_cache()) return poly.vertices();
  return enumerate_vertices<Scalar>(std::span(poly.constraints()), poly.dim(), poly.upward_axis())
      .vertices;
}

/// Vertex centroid; throws DegeneracyError unless it is strictly interior.
template <typename Scalar>
Vector<Scalar> interior_point(std::span<const AffineForm<Scalar>> constraints,
                              std::span<const Vector<Scalar>> vertices, Index dim) {
  if (vertices.empty()) throw DegeneracyError("polytope is empty");
  Vector<Scalar> sum = Vector<Scalar>::Zero(dim);
  for (const auto& v : vertices) sum += v;
  const Scalar inv = Scalar(1) / Scalar(static_cast<long>(vertices.size()));
  Vector<Scalar> centroid = sum * inv;
  for (const auto& c : constraints) {
    if (!(c(centroid) > 0)) throw DegeneracyError("polytope is not full-dimensional");
  }
  return centroid;
}

template <typename Scalar>
Vector<Scalar> interior_point(const Polytope<Scalar>& poly) {
  if (poly.interior()) return *poly.interior();
  const auto verts = enumerate_vertices(poly);
  return interior_point<Scalar>(std::span(poly.constraints()), std::span(verts), poly.dim());
}

/// Normalizes and deduplicates the constraints, enumerates vertices, drops
/// constraints that do not define a facet and, for bounded polytopes,
/// computes the interior point. Throws DegeneracyError when empty or, for
/// bounded polytopes, not full-dimensional.
template <typename Scalar>
Polytope<Scalar> with_cache(const Polytope<Scalar>& poly) {
  using Form = AffineForm<Scalar>;
  using Pt = Vector<Scalar>;
  const Index dim = poly.dim();

  std::vector<Form> unique;
  std::set<Form, AffineFormLess<Scalar>> seen;
  for (const auto& c : poly.constraints()) {
    if (c.has_zero_gradient()) {
      if (c.constant < 0) throw DegeneracyError("polytope is empty");
      continue;
    }
    Form normalized = normalize_halfspace(c);
    if (seen.insert(normalized).second) unique.push_back(std::move(normalized));
  }

  auto en = enumerate_vertices<Scalar>(std::span<const Form>(unique), dim, poly.upward_axis());
  if (en.vertices.empty()) throw DegeneracyError("polytope is empty");

  std::vector<Form> facets;
  for (const auto& c : unique) {
    std::vector<const Pt*> tight;
    for (const auto& v : en.vertices) {
      if (c(v) == 0) tight.push_back(&v);
    }
    if (tight.empty()) continue;
    std::vector<Pt> rows;
    for (std::size_t i = 1; i < tight.size(); ++i) rows.push_back(*tight[i] - *tight[0]);
    for (const auto& r : en.rays) {
      if (c.gradient.dot(r) == 0) rows.push_back(r);
    }
    Index r = 0;
    if (!rows.empty()) {
      Matrix<Scalar> m(static_cast<Index>(rows.size()), dim);
      for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Index>(i)) = rows[i].transpose();
      r = linalg::rank(std::move(m));
    }
    if (r == dim - 1) facets.push_back(c);
  }

  std::optional<Pt> interior;
  if (!poly.upward_axis()) {
    interior = interior_point<Scalar>(std::span<const Form>(facets), std::span(en.vertices), dim);
  }
  return Polytope<Scalar>(std::move(facets), dim, std::move(en.vertices), std::move(interior),
                          poly.upward_axis());
}

/// Like with_cache(), but reports emptiness or lower dimension as nullopt.
template <typename Scalar>
std::optional<Polytope<Scalar>> make_full_dimensional(std::vector<AffineForm<Scalar>> constraints,
                                                      Index dim) {
  try {
    return with_cache(Polytope<Scalar>(std::move(constraints), dim));
  } catch (const DegeneracyError&) {
    return std::nullopt;
  }
}

/// poly ∩ { halfspace >= 0 }; the result carries no caches.
template <typename Scalar>
Polytope<Scalar> intersect(const Polytope<Scalar>& poly, AffineForm<Scalar> halfspace) {
  auto constraints = poly.constraints();
  constraints.push_back(std::move(halfspace));
  return Polytope<Scalar>(std::move(constraints), poly.dim(), poly.upward_axis());
}

template <typename Scalar>
struct SplitResult {
  std::optional<Polytope<Scalar>> below;  // poly ∩ { h <= 0 }
  std::optional<Polytope<Scalar>> above;  // poly ∩ { h >= 0 }
};

/// Splits a bounded, cached, full-dimensional polytope by a hyperplane.
/// A side is absent when it is not full-dimensional.
template <typename Scalar>
SplitResult<Scalar> split(const Polytope<Scalar>& poly, const Hyperplane<Scalar>& h) {
  const auto& verts = poly.vertices();
  bool has_negative = false;
  bool has_positive = false;
  for (const auto& v : verts) {
    const Scalar s = h.form(v);
    if (s < 0) has_negative = true;
    if (s > 0) has_positive = true;
  }
  SplitResult<Scalar> out;
  if (has_negative && has_positive) {
    out.below = with_cache(intersect(poly, -h.form));
    out.above = with_cache(intersect(poly, h.form));
  } else if (has_negative) {
    out.below = poly;
  } else if (has_positive) {
    out.above = poly;
  }
  return out;
}

/// Full-dimensional cells of the arrangement of `hyperplanes` restricted to
/// `region`, by successive splitting. Cells are closed and ordered
/// lexicographically by interior point.
template <typename Scalar>
std::vector<Polytope<Scalar>> arrangement_cells(const Polytope<Scalar>& region,
                                                std::span<const Hyperplane<Scalar>> hyperplanes) {
  std::vector<Polytope<Scalar>> pieces{region.has_vertex_cache() && region.interior()
                                           ? region
                                           : with_cache(region)};
  for (const auto& h : hyperplanes) {
    std::vector<Polytope<Scalar>> next;
    next.reserve(pieces.size() + 1);
    for (const auto& piece : pieces) {
      auto [below, above] = split(piece, h);
      if (below) next.push_back(std::move(*below));
      if (above) next.push_back(std::move(*above));
    }
    pieces = std::move(next);
  }
  std::sort(pieces.begin(), pieces.end(), [](const auto& a, const auto& b) {
    return PointLess{}(*a.interior(), *b.interior());
  });
  return pieces;
}

}  // namespace pmi

#endif  // PMI_GEOMETRY_HPP
