#include "hklat/reflections.hpp"

#include <algorithm>
#include <optional>

#include "hklat/cones.hpp"

namespace hklat {
namespace {

bool lex_less(const VectorQ& x, const VectorQ& y) {
  return std::lexicographical_compare(x.data(), x.data() + x.size(), y.data(), y.data() + y.size());
}

}  // namespace

Wall::Wall(const Lattice& lat, const VectorQ& d) {
  detail::check_length(lat, d);
  if (is_zero_vector(d)) throw Error(ErrorKind::kNotAWall, "zero class");
  d_ = primitive(d);
  q_ = quadratic(lat, d_);
  if (q_.sign() >= 0) throw Error(ErrorKind::kNotAWall, "q(d) = " + format_rational(q_) + " >= 0");
}

VectorQ reflect(const Lattice& lat, const Wall& d, const VectorQ& v) {
  detail::check_length(lat, v);
  return v - d.d() * Rational(2 * bilinear(lat, d.d(), v) / d.q());
}

VectorQ reflect(const Lattice& lat, const VectorQ& d, const VectorQ& v) {
  detail::check_length(lat, d);
  detail::check_length(lat, v);
  const Rational qd = quadratic(lat, d);
  if (qd.sign() >= 0) throw Error(ErrorKind::kNotAWall, "q(d) = " + format_rational(qd) + " >= 0");
  return v - d * Rational(2 * bilinear(lat, d, v) / qd);
}

bool is_integral_reflection(const Lattice& lat, const Wall& d) {
  if (!lat.is_integral()) {
    // Fall back to the definition on the standard basis.
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(lat.rank()); ++i) {
      VectorQ e = VectorQ::Zero(static_cast<Eigen::Index>(lat.rank()));
      e(i) = 1;
      if (!is_integral(reflect(lat, d, e))) return false;
    }
    return true;
  }
  const VectorQ gd = lat.gram() * d.d();
  for (Eigen::Index i = 0; i < gd.size(); ++i) {
    if (!is_integer(Rational(2 * gd(i) / d.q()))) return false;
  }
  return true;
}

bool in_closed_bk_cone(const Lattice& lat, const std::vector<Wall>& walls, const VectorQ& h,
                       const VectorQ& v) {
  if (!classify(lat, h, v).in_closed_component()) return false;
  return std::all_of(walls.begin(), walls.end(),
                     [&](const Wall& w) { return bilinear(lat, v, w.d()).sign() >= 0; });
}

WalkResult walk_to_bk_cone(const Lattice& lat, const std::vector<Wall>& walls, const VectorQ& h,
                           const VectorQ& alpha) {
  detail::require_reference(lat, h);
  detail::check_length(lat, alpha);
  if (is_zero_vector(alpha)) throw Error(ErrorKind::kPrecondition, "alpha != 0");
  if (quadratic(lat, alpha).sign() < 0) throw Error(ErrorKind::kPrecondition, "q(alpha) >= 0");
  if (bilinear(lat, alpha, h).sign() <= 0) throw Error(ErrorKind::kWrongComponent, "(alpha, h) <= 0");
  for (std::size_t i = 0; i < walls.size(); ++i) {
    if (bilinear(lat, walls[i].d(), h).sign() <= 0) {
      throw Error(ErrorKind::kWallNotPositive, "wall " + std::to_string(i) + " has (d, h) <= 0");
    }
    if (!is_integral_reflection(lat, walls[i])) {
      throw Error(ErrorKind::kPrecondition,
                  "wall " + std::to_string(i) + " does not induce an integral reflection");
    }
  }

  WalkResult result;
  result.beta = primitive(alpha);
  Eigen::Index lead = 0;
  while (alpha(lead).is_zero()) ++lead;
  result.scale = result.beta(lead) / alpha(lead);
  result.trace.push_back(bilinear(lat, result.beta, h));

  for (;;) {
    std::optional<std::size_t> chosen;
    Rational most_negative = 0;
    for (std::size_t i = 0; i < walls.size(); ++i) {
      const Rational pairing = bilinear(lat, result.beta, walls[i].d());
      if (pairing.sign() >= 0) continue;
      if (!chosen || pairing < most_negative ||
          (pairing == most_negative && lex_less(walls[i].d(), walls[*chosen].d()))) {
        chosen = i;
        most_negative = pairing;
      }
    }
    if (!chosen) break;
    result.beta = reflect(lat, walls[*chosen], result.beta);
    result.word.push_back(*chosen);
    const Rational next = bilinear(lat, result.beta, h);
    if (!(next < result.trace.back()) || next.sign() <= 0) {
      throw Error(ErrorKind::kInternal, "monovariant (alpha_i, h) failed to decrease");
    }
    result.trace.push_back(next);
  }
  return result;
}

VectorQ replay(const Lattice& lat, const std::vector<Wall>& walls, const ReflectionWord& word,
               VectorQ alpha) {
  for (std::size_t index : word) {
    if (index >= walls.size()) throw Error(ErrorKind::kShape, "word refers to a missing wall");
    alpha = reflect(lat, walls[index], alpha);
  }
  return alpha;
}

}  // namespace hklat
