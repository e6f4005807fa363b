#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "hklat/lattice.hpp"

namespace hklat {

enum class ConeRegion { kPositiveInterior, kBoundary, kNegative, kOppositeComponent };

/// Position of a class relative to the positive cone component containing a
/// reference class h. Depends only on the signs of q(v) and (v, h).
struct ConeClassification {
  ConeRegion region;
  int pairing_sign;  // sign of (v, h); on the boundary, >= 0 means the closure of h's component

  bool in_closed_component() const {
    return region == ConeRegion::kPositiveInterior ||
           (region == ConeRegion::kBoundary && pairing_sign >= 0);
  }
};

const char* to_string(ConeRegion region);

namespace detail {
template <typename Scalar>
void require_reference(const Lattice& lat, const Vector<Scalar>& h) {
  require_hyperbolic(lat);
  if (sign(quadratic(lat, h)) <= 0) {
    throw Error(ErrorKind::kNotPositive, "q(h) must be > 0");
  }
}
}  // namespace detail

/// Requires q(h) > 0 and lat of signature (1, rank - 1).
template <typename Scalar>
ConeClassification classify(const Lattice& lat, const Vector<Scalar>& h, const Vector<Scalar>& v) {
  detail::require_reference(lat, h);
  const int q_sign = sign(quadratic(lat, v));
  const int pairing = sign(bilinear(lat, v, h));
  if (q_sign < 0) return {ConeRegion::kNegative, pairing};
  if (q_sign == 0) return {ConeRegion::kBoundary, pairing};
  // (v, h) = 0 with q(v) > 0 cannot happen in signature (1, rank - 1).
  return {pairing > 0 ? ConeRegion::kPositiveInterior : ConeRegion::kOppositeComponent, pairing};
}

/// gamma = 2 (alpha, beta') beta' - q(beta') alpha: a boundary class that is
/// not collinear with alpha, for any rational alpha != 0 with q(alpha) = 0 and
/// rational beta' with q(beta') > 0. When alpha and beta' lie in the same
/// closed component, so does gamma.
VectorQ sample_boundary(const Lattice& lat, const VectorQ& alpha, const VectorQ& beta_prime);

/// `count` boundary classes in the closed component of h, each obtained from
/// sample_boundary with an interior beta' drawn uniformly from integer
/// vectors of max-norm <= B (B starts at 4 and doubles after every 64
/// consecutive rejections) and then scaled to a primitive integer vector.
///
/// Every output is non-collinear with alpha. For rank >= 3 outputs are also
/// pairwise non-collinear; in rank 2 the boundary of the component consists
/// of only two rays, so every output lies on the ray opposite alpha's.
/// Requires (alpha, h) > 0. Deterministic in `seed`.
std::vector<VectorQ> sample_boundary_stream(const Lattice& lat, const VectorQ& alpha,
                                            const VectorQ& h, std::size_t count,
                                            std::uint64_t seed);

/// Stateful form of sample_boundary_stream: next() yields the stream one
/// class at a time, so the first k calls reproduce a stream of count k.
class BoundarySampler {
 public:
  BoundarySampler(const Lattice& lat, VectorQ alpha, VectorQ h, std::uint64_t seed);

  VectorQ next();

 private:
  static constexpr int kRejectionsBeforeDoubling = 64;

  const Lattice* lat_;
  VectorQ alpha_;
  VectorQ h_;
  std::mt19937_64 rng_;
  // beta' = delta + weight_ * h with delta uniform in [-bound_, bound_]^n.
  // Misses grow the weight, repeats grow the box.
  long bound_ = 4;
  long weight_ = 1;
  std::vector<VectorQ> emitted_;  // rank >= 3 only, for direction checks
};

struct BoundaryRoot {
  QuadExt root;               // r in (1 - r) H + r L
  Vector<QuadExt> point;      // (1 - r) H + r L
  bool in_component = false;  // (point, H) >= 0
};

/// Real solutions r of q((1 - r) H + r L) = 0, with
///   q = q(H) - 2 r (q(H) - (H, L)) + r^2 (q(H) - 2 (H, L) + q(L)),
/// as exact elements of Q(sqrt d), ascending. Empty if no real root exists.
/// Requires q(H) > 0 and L not proportional to H.
std::vector<BoundaryRoot> boundary_ray(const Lattice& lat, const VectorQ& H, const VectorQ& L);

/// Coefficients (c0, c1, c2) of the quadratic in r solved by boundary_ray.
std::array<Rational, 3> boundary_ray_polynomial(const Lattice& lat, const VectorQ& H, const VectorQ& L);

}  // namespace hklat
