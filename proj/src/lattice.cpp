#include "hklat/lattice.hpp"

#include <vector>

namespace hklat {

Lattice::Lattice(MatrixQ gram, std::string label) : gram_(std::move(gram)), label_(std::move(label)) {
  if (gram_.rows() == 0 || gram_.rows() != gram_.cols()) {
    throw Error(ErrorKind::kShape, "gram must be a nonempty square matrix");
  }
  for (Eigen::Index i = 0; i < gram_.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < gram_.cols(); ++j) {
      if (gram_(i, j) != gram_(j, i)) {
        throw Error(ErrorKind::kShape, "gram is not symmetric at (" + std::to_string(i) + ", " +
                                           std::to_string(j) + ")");
      }
    }
  }
  determinant_ = hklat::determinant(gram_);
  if (determinant_.is_zero()) throw Error(ErrorKind::kDegenerate, "gram has determinant 0");
  signature_ = hklat::signature(gram_);
}

bool Lattice::is_integral() const {
  for (Eigen::Index i = 0; i < gram_.size(); ++i) {
    if (!is_integer(gram_.data()[i])) return false;
  }
  return true;
}

bool Lattice::is_even() const {
  if (!is_integral()) return false;
  for (Eigen::Index i = 0; i < gram_.rows(); ++i) {
    if (boost::multiprecision::numerator(gram_(i, i)) % 2 != 0) return false;
  }
  return true;
}

Lattice diagonal_lattice(std::initializer_list<long> entries, std::string label) {
  const auto n = static_cast<Eigen::Index>(entries.size());
  MatrixQ gram = MatrixQ::Zero(n, n);
  Eigen::Index i = 0;
  for (long x : entries) {
    gram(i, i) = Rational(x);
    ++i;
  }
  return Lattice(std::move(gram), std::move(label));
}

Signature signature(const MatrixQ& gram) {
  Signature sig;
  for (const Rational& d : diagonalize(gram).diagonal) {
    switch (d.sign()) {
      case 1: ++sig.positive; break;
      case -1: ++sig.negative; break;
      default: ++sig.zero; break;
    }
  }
  return sig;
}

void require_hyperbolic(const Lattice& lat) {
  if (!lat.is_hyperbolic()) {
    const auto& s = lat.signature();
    throw Error(ErrorKind::kSignature, "expected signature (1, " + std::to_string(lat.rank() - 1) +
                                           "), got (" + std::to_string(s.positive) + ", " +
                                           std::to_string(s.negative) + ")");
  }
}

MatrixQ hyperbolic_plane() {
  MatrixQ u(2, 2);
  u << Rational(0), Rational(1), Rational(1), Rational(0);
  return u;
}

MatrixQ e8_negative() {
  // Cartan matrix of E8, Bourbaki labelling: chain 1-3-4-5-6-7-8 with 2
  // attached to 4.
  const std::vector<std::pair<int, int>> edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5},
                                                  {5, 6}, {6, 7}, {1, 3}};
  MatrixQ e8 = MatrixQ::Zero(8, 8);
  for (int i = 0; i < 8; ++i) e8(i, i) = Rational(-2);
  for (const auto& [i, j] : edges) {
    e8(i, j) = Rational(1);
    e8(j, i) = Rational(1);
  }
  return e8;
}

namespace {

MatrixQ direct_sum(const std::vector<MatrixQ>& blocks) {
  Eigen::Index n = 0;
  for (const auto& b : blocks) n += b.rows();
  MatrixQ out = MatrixQ::Zero(n, n);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    out.block(at, at, b.rows(), b.cols()) = b;
    at += b.rows();
  }
  return out;
}

MatrixQ rank_one(long value) {
  MatrixQ m(1, 1);
  m(0, 0) = Rational(value);
  return m;
}

}  // namespace

Lattice builtin_lattice(LatticeFamily family, int n) {
  const MatrixQ u = hyperbolic_plane();
  switch (family) {
    case LatticeFamily::kK3:
      return Lattice(direct_sum({u, u, u, e8_negative(), e8_negative()}), "K3");
    case LatticeFamily::kK3Hilb:
      if (n < 2) throw Error(ErrorKind::kParameter, "K3^[n] needs n >= 2");
      return Lattice(direct_sum({u, u, u, e8_negative(), e8_negative(), rank_one(-2L * (n - 1))}),
                     "K3^[" + std::to_string(n) + "]");
    case LatticeFamily::kKummer:
      if (n < 2) throw Error(ErrorKind::kParameter, "Kummer_n needs n >= 2");
      return Lattice(direct_sum({u, u, u, rank_one(-2L * (n + 1))}),
                     "Kum_" + std::to_string(n));
  }
  throw Error(ErrorKind::kParameter, "unknown lattice family");
}

}  // namespace hklat
