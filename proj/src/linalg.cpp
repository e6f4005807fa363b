#include "hklat/linalg.hpp"

#include <utility>

namespace hklat {

VectorQ primitive(const VectorQ& v) {
  if (is_zero_vector(v)) throw Error(ErrorKind::kDomain, "primitive of zero vector");
  Integer den_lcm = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(v(i)));
  }
  Integer num_gcd = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const Integer scaled = boost::multiprecision::numerator(v(i)) *
                           (den_lcm / boost::multiprecision::denominator(v(i)));
    num_gcd = boost::multiprecision::gcd(num_gcd, scaled);
  }
  return v * Rational(den_lcm, num_gcd);
}

Rational determinant(MatrixQ m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::kShape, "determinant of non-square matrix");
  const Eigen::Index n = m.rows();
  Rational det = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      m.row(pivot).swap(m.row(k));
      det = -det;
    }
    det *= m(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      const Rational c = m(i, k) / m(k, k);
      m.row(i) -= m.row(k) * c;
    }
  }
  return det;
}

std::size_t rank(MatrixQ m) {
  RowSpace<Rational> space(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) space.insert(m.row(i).transpose());
  return space.rank();
}

Diagonalization diagonalize(const MatrixQ& gram) {
  if (gram.rows() != gram.cols()) throw Error(ErrorKind::kShape, "gram must be square");
  const Eigen::Index n = gram.rows();
  MatrixQ a = gram;
  MatrixQ basis = MatrixQ::Identity(n, n);

  // Congruence by an elementary column operation: apply to basis columns and
  // to a as a -> E^T a E.
  const auto add_multiple = [&](Eigen::Index target, Eigen::Index source, const Rational& c) {
    basis.col(target) += basis.col(source) * c;
    a.col(target) += a.col(source) * c;
    a.row(target) += a.row(source) * c;
  };
  const auto swap = [&](Eigen::Index i, Eigen::Index j) {
    basis.col(i).swap(basis.col(j));
    a.col(i).swap(a.col(j));
    a.row(i).swap(a.row(j));
  };

  for (Eigen::Index k = 0; k < n; ++k) {
    if (a(k, k).is_zero()) {
      Eigen::Index j = k + 1;
      while (j < n && a(j, j).is_zero()) ++j;
      if (j < n) {
        swap(k, j);
      } else {
        j = k + 1;
        while (j < n && a(k, j).is_zero()) ++j;
        if (j == n) continue;  // row k is zero: degenerate direction
        // All later diagonal entries vanish, so the new a(k,k) is 2 a(k,j).
        add_multiple(k, j, Rational(1));
      }
    }
    for (Eigen::Index j = k + 1; j < n; ++j) {
      if (a(k, j).is_zero()) continue;
      add_multiple(j, k, -a(k, j) / a(k, k));
    }
  }

  Diagonalization out;
  out.basis = std::move(basis);
  out.diagonal.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out.diagonal.push_back(a(i, i));
  return out;
}

}  // namespace hklat
