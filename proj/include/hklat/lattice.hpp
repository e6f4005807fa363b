#pragma once

#include <string>
#include <type_traits>

#include "hklat/linalg.hpp"

namespace hklat {

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// A nondegenerate symmetric bilinear form on Q^rank given by its Gram
/// matrix: q(v) = v^T G v and (v, w) = v^T G w. Even lattices thus have an
/// even diagonal.
///
/// Construction validates symmetry and nondegeneracy; the signature is
/// computed once and cached. Instances are immutable.
class Lattice {
 public:
  explicit Lattice(MatrixQ gram, std::string label = {});

  std::size_t rank() const { return static_cast<std::size_t>(gram_.rows()); }
  const MatrixQ& gram() const { return gram_; }
  const std::string& label() const { return label_; }
  const Signature& signature() const { return signature_; }
  const Rational& determinant() const { return determinant_; }

  /// Signature (1, rank - 1), the shape of a Neron-Severi lattice.
  bool is_hyperbolic() const { return signature_.positive == 1 && signature_.zero == 0; }
  bool is_integral() const;
  bool is_even() const;

  friend bool operator==(const Lattice& x, const Lattice& y) {
    return x.label_ == y.label_ && x.gram_ == y.gram_;
  }

 private:
  MatrixQ gram_;
  std::string label_;
  Signature signature_;
  Rational determinant_;
};

/// Diagonal lattice diag(entries...).
Lattice diagonal_lattice(std::initializer_list<long> entries, std::string label = {});

/// Counts of positive, negative and zero pivots in an exact congruence
/// diagonalization over Q.
Signature signature(const MatrixQ& gram);
inline const Signature& signature(const Lattice& lat) { return lat.signature(); }

/// Throws kSignature unless lat is hyperbolic.
void require_hyperbolic(const Lattice& lat);

namespace detail {
template <typename Derived>
void check_length(const Lattice& lat, const Eigen::MatrixBase<Derived>& v) {
  if (static_cast<std::size_t>(v.size()) != lat.rank()) {
    throw Error(ErrorKind::kShape, "vector of length " + std::to_string(v.size()) +
                                       " on a lattice of rank " + std::to_string(lat.rank()));
  }
}
}  // namespace detail

/// (v, w) = v^T G w, exact in the scalar domain of v and w.
template <typename Scalar>
Scalar bilinear(const Lattice& lat, const Vector<Scalar>& v, const Vector<Scalar>& w) {
  detail::check_length(lat, v);
  detail::check_length(lat, w);
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return v.cwiseProduct(lat.gram() * w).sum();
  } else {
    const Matrix<Scalar> gram = lat.gram().template cast<Scalar>();
    return v.cwiseProduct(gram * w).sum();
  }
}

template <typename Scalar>
Scalar quadratic(const Lattice& lat, const Vector<Scalar>& v) {
  return bilinear(lat, v, v);
}

enum class LatticeFamily { kK3, kK3Hilb, kKummer };

/// Standard second-cohomology lattices: U^3 + 2E8(-1) for K3,
/// plus <-2(n-1)> for K3^[n]-type, and U^3 + <-2(n+1)> for generalized
/// Kummer type. n >= 2 for the parametrized families.
Lattice builtin_lattice(LatticeFamily family, int n = 0);

/// Hyperbolic plane U.
MatrixQ hyperbolic_plane();
/// E8 root lattice with negated form, E8(-1).
MatrixQ e8_negative();

}  // namespace hklat
