#pragma once

#include <vector>

#include "hklat/lattice.hpp"

namespace hklat {

/// A prime exceptional class: primitive integral d with q(d) < 0.
class Wall {
 public:
  /// Normalizes d to its primitive integral representative (same direction).
  /// Throws kNotAWall if q(d) >= 0.
  Wall(const Lattice& lat, const VectorQ& d);

  const VectorQ& d() const { return d_; }
  const Rational& q() const { return q_; }

 private:
  VectorQ d_;
  Rational q_;
};

/// Indices into a wall list, applied left to right.
using ReflectionWord = std::vector<std::size_t>;

/// R_d(v) = v - (2 (d, v) / q(d)) d. Isometry and involution.
VectorQ reflect(const Lattice& lat, const Wall& d, const VectorQ& v);

/// Throws kNotAWall when q(d) >= 0.
VectorQ reflect(const Lattice& lat, const VectorQ& d, const VectorQ& v);

/// Whether R_d maps Z^rank into itself, i.e. q(d) divides 2 (d, e_i) for
/// every basis vector e_i.
bool is_integral_reflection(const Lattice& lat, const Wall& d);

/// v in the closure of h's positive cone component with (v, d) >= 0 for
/// every listed wall. The answer is relative to the finite wall list: with
/// fewer walls the cone can only grow.
bool in_closed_bk_cone(const Lattice& lat, const std::vector<Wall>& walls, const VectorQ& h,
                       const VectorQ& v);

struct WalkResult {
  VectorQ beta;
  ReflectionWord word;
  std::vector<Rational> trace;  // (alpha_i, h) for i = 0..k, strictly decreasing
  Rational scale;               // alpha was multiplied by this to become integral
};

/// Reflects alpha into the closed birational Kahler cone cut out by `walls`.
///
/// alpha is first scaled to a primitive integral class. While some wall has
/// (alpha_i, d) < 0, the wall with the most negative pairing is applied
/// (ties: lexicographically smallest d). Each step strictly lowers (alpha_i, h)
/// by 2 (d, alpha_i)/q(d) * (d, h) > 0, and with integral reflections these
/// values live in a discrete subset of the positive reals, so the walk stops.
///
/// Requires alpha != 0, q(alpha) >= 0, (alpha, h) > 0, q(h) > 0, every wall
/// with (d, h) > 0 and an integral reflection.
WalkResult walk_to_bk_cone(const Lattice& lat, const std::vector<Wall>& walls, const VectorQ& h,
                           const VectorQ& alpha);

/// Applies the word to alpha, returning the final class.
VectorQ replay(const Lattice& lat, const std::vector<Wall>& walls, const ReflectionWord& word,
               VectorQ alpha);

}  // namespace hklat
