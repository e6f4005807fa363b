#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "hklat/error.hpp"
#include "hklat/quad_ext.hpp"
#include "hklat/rational.hpp"

namespace hklat {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VectorQ = Vector<Rational>;
using MatrixQ = Matrix<Rational>;

/// Builds a rational vector from integer literals, e.g. vec({1, -1}).
inline VectorQ vec(std::initializer_list<long> entries) {
  VectorQ v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (long x : entries) v(i++) = Rational(x);
  return v;
}

template <typename Derived>
bool is_zero_vector(const Eigen::MatrixBase<Derived>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!is_zero(v(i))) return false;
  }
  return true;
}

inline bool is_integral(const VectorQ& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!is_integer(v(i))) return false;
  }
  return true;
}

/// Positive rational multiple of v with coprime integer coordinates. v != 0.
VectorQ primitive(const VectorQ& v);

/// True iff v and w span a space of dimension <= 1 (every 2x2 minor of the
/// stacked coordinates vanishes).
template <typename Scalar>
bool collinear(const Vector<Scalar>& v, const Vector<Scalar>& w) {
  if (v.size() != w.size()) throw Error(ErrorKind::kShape, "collinearity of different lengths");
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    for (Eigen::Index j = i + 1; j < v.size(); ++j) {
      if (!is_zero(Scalar(v(i) * w(j) - v(j) * w(i)))) return false;
    }
  }
  return true;
}

/// Exact determinant by fraction-tracking Gaussian elimination.
Rational determinant(MatrixQ m);

/// Exact rank.
std::size_t rank(MatrixQ m);

/// Congruence diagonalization of a symmetric rational matrix:
/// basis^T * gram * basis == diag(diagonal), basis invertible.
struct Diagonalization {
  std::vector<Rational> diagonal;
  MatrixQ basis;  // columns are the new basis vectors
};

/// Symmetric Lagrange reduction over Q. When a diagonal pivot vanishes the
/// pivot is swapped with a later nonzero diagonal entry, or else e_k is
/// replaced by e_k + e_j for an off-diagonal partner j.
Diagonalization diagonalize(const MatrixQ& gram);

/// Incrementally maintained reduced row echelon form over an exact field.
/// The stored rows are canonical: two RowSpaces span the same subspace iff
/// their rows() are equal.
template <typename Scalar>
class RowSpace {
 public:
  explicit RowSpace(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vector<Scalar>>& rows() const { return rows_; }

  /// Residue of v after elimination against the current rows.
  Vector<Scalar> reduce(Vector<Scalar> v) const {
    check_width(v);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Eigen::Index p = pivots_[r];
      if (is_zero(v(p))) continue;
      const Scalar c = v(p);
      v -= rows_[r] * c;
    }
    return v;
  }

  bool contains(const Vector<Scalar>& v) const { return is_zero_vector(reduce(v)); }

  /// Adds v; returns true iff the rank grew.
  bool insert(const Vector<Scalar>& v) {
    Vector<Scalar> residue = reduce(v);
    Eigen::Index pivot = -1;
    for (Eigen::Index i = 0; i < residue.size(); ++i) {
      if (!is_zero(residue(i))) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return false;
    const Scalar lead = residue(pivot);
    for (Eigen::Index i = 0; i < residue.size(); ++i) residue(i) /= lead;
    for (auto& row : rows_) {
      if (is_zero(row(pivot))) continue;
      const Scalar c = row(pivot);
      row -= residue * c;
    }
    // Keep rows ordered by pivot column.
    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < pivot) ++at;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(residue));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(at), pivot);
    return true;
  }

  friend bool operator==(const RowSpace& x, const RowSpace& y) {
    if (x.width_ != y.width_ || x.rows_.size() != y.rows_.size()) return false;
    for (std::size_t r = 0; r < x.rows_.size(); ++r) {
      if (x.rows_[r] != y.rows_[r]) return false;
    }
    return true;
  }

 private:
  void check_width(const Vector<Scalar>& v) const {
    if (static_cast<std::size_t>(v.size()) != width_) {
      throw Error(ErrorKind::kShape, "row of wrong width");
    }
  }

  std::size_t width_;
  std::vector<Vector<Scalar>> rows_;
  std::vector<Eigen::Index> pivots_;
};

}  // namespace hklat
