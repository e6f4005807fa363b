#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hklat/lattice.hpp"

namespace hklat {

/// A place of Q: a finite prime p or the real place.
class LocalPlace {
 public:
  static LocalPlace infinity() { return LocalPlace(); }
  /// Throws kDomain unless p is prime.
  static LocalPlace prime(const Integer& p);

  bool is_infinite() const { return !prime_.has_value(); }
  const Integer& p() const { return *prime_; }
  std::string to_string() const { return is_infinite() ? "infinity" : prime_->str(); }

 private:
  LocalPlace() = default;
  std::optional<Integer> prime_;
};

/// Hilbert symbol (a, b)_v in {+1, -1}: +1 iff z^2 = a x^2 + b y^2 has a
/// nontrivial solution over Q_v. Classical formulas: Legendre symbols on unit
/// parts for odd p, the epsilon/omega invariants for p = 2, a sign test at
/// infinity.
int hilbert_symbol(const Rational& a, const Rational& b, const LocalPlace& place);

/// Whether the diagonal form <a_1, ..., a_r> represents zero nontrivially
/// over Q_v. Uses discriminant d = prod a_i and Hasse invariant
/// e = prod_{i<j} (a_i, a_j)_v:
///   r = 1: never
///   r = 2: -d is a square in Q_v
///   r = 3: (-1, -d)_v == e
///   r = 4: d is not a square in Q_v, or e == (-1, -1)_v
///   r >= 5: always at finite places; indefinite at infinity
bool is_locally_isotropic(std::span<const Rational> diagonal, const LocalPlace& place);

/// Places where a diagonal form can fail to be isotropic: infinity and the
/// primes dividing 2 * prod(numerators * denominators).
std::vector<LocalPlace> relevant_places(std::span<const Rational> diagonal);

/// Isotropy over Q of a diagonal form with nonzero rational entries
/// (Hasse-Minkowski). A zero entry raises kDegenerate.
bool is_isotropic_diagonal(std::span<const Rational> diagonal);

/// Whether q represents 0 nontrivially over Q. Rank >= 5 indefinite forms
/// are decided without local work; lower ranks go through the local tests at
/// every relevant place (rank 2 reduces to -det being a rational square).
bool is_isotropic(const Lattice& lat);

struct IsotropyWitness {
  VectorQ vector;  // integer coordinates in the lattice basis
  bool reduced = false;  // gcd of coordinates is 1
};

struct IsotropySearch {
  std::optional<IsotropyWitness> witness;
  /// Human-readable description of the height bound that makes the search
  /// complete, including the max-norm actually reached.
  std::string bound_used;
};

/// Finds a primitive integral isotropic vector, or reports none.
///
/// The Gram matrix is scaled to an integral form F = sum f_ij x_i x_j and
/// searched in the lattice's own coordinates (a diagonal Gram takes a faster
/// sign-free path). Candidates are enumerated by increasing max-norm N; within
/// a shell the order is colexicographic (last coordinate varies slowest) over
/// the digits 0, 1, -1, 2, -2, ... and the first coordinate is solved for, so
/// the first hit is canonical. Completeness comes from Cassels' bound: an
/// isotropic integral form in n variables has a nonzero zero with
/// max|x_i| <= (3H)^((n-1)/2), H = sum |f_ij|. If that bound is passed without
/// a hit although the local tests say isotropic, Error(kInternal, "bound
/// violated") is raised.
IsotropySearch find_isotropic_vector(const Lattice& lat);

}  // namespace hklat
