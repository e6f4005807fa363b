#include "hklat/cones.hpp"

#include <algorithm>

namespace hklat {

const char* to_string(ConeRegion region) {
  switch (region) {
    case ConeRegion::kPositiveInterior: return "positive_interior";
    case ConeRegion::kBoundary: return "boundary";
    case ConeRegion::kNegative: return "negative";
    case ConeRegion::kOppositeComponent: return "opposite_component";
  }
  return "?";
}

VectorQ sample_boundary(const Lattice& lat, const VectorQ& alpha, const VectorQ& beta_prime) {
  detail::check_length(lat, alpha);
  detail::check_length(lat, beta_prime);
  if (is_zero_vector(alpha)) throw Error(ErrorKind::kPrecondition, "alpha != 0");
  if (!quadratic(lat, alpha).is_zero()) throw Error(ErrorKind::kPrecondition, "q(alpha) = 0");
  const Rational q_beta = quadratic(lat, beta_prime);
  if (q_beta.sign() <= 0) throw Error(ErrorKind::kPrecondition, "q(beta') > 0");
  const Rational pairing = bilinear(lat, alpha, beta_prime);
  if (pairing.is_zero()) {
    throw Error(ErrorKind::kPrecondition, "(alpha, beta') != 0 (lattice not hyperbolic)");
  }
  VectorQ gamma = beta_prime * Rational(2 * pairing) - alpha * q_beta;
  if (!quadratic(lat, gamma).is_zero() || collinear(gamma, alpha)) {
    throw Error(ErrorKind::kInternal, "boundary sample failed re-verification");
  }
  return gamma;
}

BoundarySampler::BoundarySampler(const Lattice& lat, VectorQ alpha, VectorQ h, std::uint64_t seed)
    : lat_(&lat), alpha_(std::move(alpha)), h_(std::move(h)), rng_(seed) {
  detail::require_reference(lat, h_);
  detail::check_length(lat, alpha_);
  if (is_zero_vector(alpha_)) throw Error(ErrorKind::kPrecondition, "alpha != 0");
  if (!quadratic(lat, alpha_).is_zero()) throw Error(ErrorKind::kPrecondition, "q(alpha) = 0");
  if (bilinear(lat, alpha_, h_).sign() <= 0) {
    throw Error(ErrorKind::kPrecondition, "(alpha, h) > 0");
  }
}

VectorQ BoundarySampler::next() {
  const Lattice& lat = *lat_;
  const auto rank = static_cast<Eigen::Index>(lat.rank());
  VectorQ beta(rank);
  int misses = 0, repeats = 0;
  for (;;) {
    std::uniform_int_distribution<long> coord(-bound_, bound_);
    for (Eigen::Index i = 0; i < rank; ++i) beta(i) = Rational(coord(rng_)) + Rational(weight_) * h_(i);
    if (classify(lat, h_, beta).region != ConeRegion::kPositiveInterior) {
      if (++misses == kRejectionsBeforeDoubling) {
        weight_ *= 2;
        misses = 0;
      }
      continue;
    }
    VectorQ gamma = primitive(sample_boundary(lat, alpha_, beta));
    if (lat.rank() < 3) return gamma;
    const bool repeated = std::any_of(emitted_.begin(), emitted_.end(),
                                      [&](const VectorQ& prev) { return collinear(prev, gamma); });
    if (repeated) {
      if (++repeats == kRejectionsBeforeDoubling) {
        bound_ *= 2;
        repeats = 0;
      }
      continue;
    }
    emitted_.push_back(gamma);
    return gamma;
  }
}

std::vector<VectorQ> sample_boundary_stream(const Lattice& lat, const VectorQ& alpha,
                                            const VectorQ& h, std::size_t count,
                                            std::uint64_t seed) {
  if (count == 0) throw Error(ErrorKind::kPrecondition, "count >= 1");
  BoundarySampler sampler(lat, alpha, h, seed);
  std::vector<VectorQ> out;
  out.reserve(count);
  while (out.size() < count) out.push_back(sampler.next());
  return out;
}

std::array<Rational, 3> boundary_ray_polynomial(const Lattice& lat, const VectorQ& H, const VectorQ& L) {
  const Rational qh = quadratic(lat, H);
  const Rational hl = bilinear(lat, H, L);
  const Rational ql = quadratic(lat, L);
  return {qh, Rational(-2 * (qh - hl)), Rational(qh - 2 * hl + ql)};
}

std::vector<BoundaryRoot> boundary_ray(const Lattice& lat, const VectorQ& H, const VectorQ& L) {
  detail::check_length(lat, H);
  detail::check_length(lat, L);
  if (quadratic(lat, H).sign() <= 0) throw Error(ErrorKind::kNotPositive, "q(H) must be > 0");
  if (collinear(H, L)) throw Error(ErrorKind::kPrecondition, "L not proportional to H");

  const auto [c0, c1, c2] = boundary_ray_polynomial(lat, H, L);
  std::vector<QuadExt> roots;
  if (c2.is_zero()) {
    if (!c1.is_zero()) roots.emplace_back(Rational(-c0 / c1));
  } else {
    const Rational disc = c1 * c1 - 4 * c2 * c0;
    if (disc.sign() >= 0) {
      const QuadExt s = QuadExt::sqrt(disc);
      const QuadExt denom(Rational(2 * c2));
      roots.push_back((QuadExt(Rational(-c1)) - s) / denom);
      if (!disc.is_zero()) roots.push_back((QuadExt(Rational(-c1)) + s) / denom);
      if (roots.size() == 2 && roots[1] < roots[0]) std::swap(roots[0], roots[1]);
    }
  }

  const Vector<QuadExt> h = H.cast<QuadExt>();
  const Vector<QuadExt> l = L.cast<QuadExt>();
  std::vector<BoundaryRoot> out;
  for (const auto& r : roots) {
    BoundaryRoot br;
    br.root = r;
    br.point = h * (QuadExt(1) - r) + l * r;
    if (!is_zero(quadratic(lat, br.point))) {
      throw Error(ErrorKind::kInternal, "boundary root failed exact re-verification");
    }
    br.in_component = sign(bilinear(lat, br.point, h)) >= 0;
    out.push_back(std::move(br));
  }
  return out;
}

}  // namespace hklat
