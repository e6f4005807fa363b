#pragma once

// Random instance generators and brute-force oracles shared by the unit
// tests and the acceptance runner. Oracles here deliberately avoid the
// library's algorithms: they enumerate or compute by hand.

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hklat/lattice.hpp"
#include "hklat/polynomial.hpp"
#include "hklat/reflections.hpp"

namespace hklat::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline VectorQ random_vector(Rng& rng, std::size_t n, long bound) {
  VectorQ v(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) v(static_cast<Eigen::Index>(i)) = Rational(uniform(rng, -bound, bound));
  return v;
}

inline MatrixQ diagonal_matrix(const std::vector<long>& entries) {
  const auto n = static_cast<Eigen::Index>(entries.size());
  MatrixQ g = MatrixQ::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) g(i, i) = Rational(entries[static_cast<std::size_t>(i)]);
  return g;
}

/// Product of `steps` elementary integer column operations e_j += +-e_i, so
/// det = 1 and the inverse is integral too.
inline MatrixQ random_unimodular(Rng& rng, std::size_t n, int steps) {
  const auto m = static_cast<Eigen::Index>(n);
  MatrixQ t = MatrixQ::Identity(m, m);
  if (n < 2) return t;
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<Eigen::Index>(uniform(rng, 0, m - 1));
    auto j = static_cast<Eigen::Index>(uniform(rng, 0, m - 2));
    if (j >= i) ++j;
    const Rational c(uniform(rng, 0, 1) ? 1 : -1);
    t.col(j) += t.col(i) * c;
  }
  return t;
}

/// Inverse of a unimodular matrix via Gauss-Jordan over Q.
inline MatrixQ inverse(const MatrixQ& m) {
  const Eigen::Index n = m.rows();
  MatrixQ a = m;
  MatrixQ inv = MatrixQ::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (a(p, c).is_zero()) ++p;
    a.row(c).swap(a.row(p));
    inv.row(c).swap(inv.row(p));
    const Rational lead = a(c, c);
    a.row(c) /= lead;
    inv.row(c) /= lead;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      const Rational f = a(r, c);
      a.row(r) -= a.row(c) * f;
      inv.row(r) -= inv.row(c) * f;
    }
  }
  return inv;
}

/// A hyperbolic lattice T^t D T together with classes known by construction.
struct HyperbolicInstance {
  Lattice lattice;
  VectorQ positive;   // q > 0
  VectorQ isotropic;  // q = 0, (isotropic, positive) > 0
};

/// D = diag(c, -c, -b_3, ..., -b_rank), always isotropic over Q, with
/// c in [1, max_c] and b_i in [1, max_b]; then a random unimodular change of
/// basis. The built-in classes are T^-1 e_1 and T^-1 (e_1 + e_2).
inline HyperbolicInstance random_isotropic_hyperbolic(Rng& rng, std::size_t rank, long max_c = 3,
                                                      long max_b = 3, int mixing = -1) {
  std::vector<long> d(rank);
  const long c = uniform(rng, 1, max_c);
  d[0] = c;
  if (rank > 1) d[1] = -c;
  for (std::size_t i = 2; i < rank; ++i) d[i] = -uniform(rng, 1, max_b);
  const MatrixQ t = random_unimodular(rng, rank, mixing < 0 ? static_cast<int>(2 * rank) : mixing);
  const MatrixQ g = t.transpose() * diagonal_matrix(d) * t;
  const MatrixQ ti = inverse(t);
  VectorQ e1 = VectorQ::Zero(static_cast<Eigen::Index>(rank));
  e1(0) = 1;
  VectorQ e12 = e1;
  if (rank > 1) e12(1) = 1;
  return {Lattice(g), ti * e1, ti * e12};
}

/// Random interior class w h + delta; w doubles every 32 misses so thin cones
/// are still reached.
inline VectorQ random_interior(Rng& rng, const Lattice& lat, const VectorQ& h, long bound) {
  long weight = 0;
  for (int miss = 1;; ++miss) {
    VectorQ v = random_vector(rng, lat.rank(), bound) + h * Rational(weight);
    if (quadratic(lat, v).sign() > 0) {
      if (bilinear(lat, v, h).sign() < 0) v = -v;
      return v;
    }
    if (miss % 32 == 0) weight = weight == 0 ? 1 : 2 * weight;
  }
}

/// All nonzero integer vectors with max-norm <= bound whose first nonzero
/// coordinate is positive: one representative per +-pair.
inline std::vector<VectorQ> small_vectors(std::size_t n, long bound) {
  std::vector<VectorQ> out;
  std::vector<long> x(n, -bound);
  for (;;) {
    bool nonzero = false, positive_lead = false;
    for (long c : x) {
      if (c != 0) {
        nonzero = true;
        positive_lead = c > 0;
        break;
      }
    }
    if (nonzero && positive_lead) {
      VectorQ v(static_cast<Eigen::Index>(n));
      for (std::size_t i = 0; i < n; ++i) v(static_cast<Eigen::Index>(i)) = Rational(x[i]);
      out.push_back(v);
    }
    std::size_t i = 0;
    while (i < n && x[i] == bound) x[i++] = -bound;
    if (i == n) break;
    ++x[i];
  }
  return out;
}

/// Walls with integral reflections and (d, h) > 0: every short vector with
/// q(d) < 0 whose reflection preserves Z^rank, oriented toward h.
inline std::vector<VectorQ> reflective_vectors(const Lattice& lat, const VectorQ& h, long bound) {
  std::vector<VectorQ> out;
  for (VectorQ d : small_vectors(lat.rank(), bound)) {
    if (quadratic(lat, d).sign() >= 0) continue;
    const int s = bilinear(lat, d, h).sign();
    if (s == 0) continue;
    if (s < 0) d = -d;
    if (primitive(d) != d) continue;
    if (is_integral_reflection(lat, Wall(lat, d))) out.push_back(d);
  }
  return out;
}

/// Exhaustive search for a nonzero integer zero of sum c_i x_i^2 with
/// max|x_i| <= bound. Signs are irrelevant, so x_i >= 0; the last
/// coordinate is solved for.
inline std::optional<std::vector<long>> brute_force_zero(const std::vector<long>& c, long bound) {
  const std::size_t r = c.size();
  std::vector<long> x(r, 0);
  for (;;) {
    std::int64_t s = 0;
    bool any = false;
    for (std::size_t i = 0; i + 1 < r; ++i) {
      s += static_cast<std::int64_t>(c[i]) * x[i] * x[i];
      any = any || x[i] != 0;
    }
    const std::int64_t last = c[r - 1];
    if (s == 0 && any) {
      x[r - 1] = 0;
      return x;
    }
    if (s % last == 0 && -s / last > 0) {
      const std::int64_t t = -s / last;
      auto y = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(t))));
      while (y * y > t) --y;
      while ((y + 1) * (y + 1) <= t) ++y;
      if (y * y == t && y <= bound) {
        x[r - 1] = y;
        return x;
      }
    }
    std::size_t i = 0;
    while (i + 1 < r && x[i] == bound) x[i++] = 0;
    if (i + 1 >= r) return std::nullopt;
    ++x[i];
  }
}

/// Local solvability of z^2 = a x^2 + b y^2 over Z_p for square-free
/// integers a, b: a primitive solution modulo p^k lifts by Hensel's lemma
/// once k > 2 v_p(gradient), so k = 3 for odd p and k = 5 for p = 2 suffice.
inline int hilbert_by_search(long a, long b, long p) {
  const int k = p == 2 ? 5 : 3;
  long m = 1;
  for (int i = 0; i < k; ++i) m *= p;
  const auto mod = [m](long v) { return ((v % m) + m) % m; };
  for (long x = 0; x < m; ++x) {
    for (long y = 0; y < m; ++y) {
      const long rhs = mod(mod(a) * (x * x % m) + mod(b) * (y * y % m));
      for (long z = 0; z < m; ++z) {
        if (x % p == 0 && y % p == 0 && z % p == 0) continue;
        if (z * z % m == rhs) return 1;
      }
    }
  }
  return -1;
}

/// Rank-2 hand oracle: the two isotropic lines of a binary form as rational
/// slopes t with L1 + t L2 isotropic, i.e. g11 + 2 g12 t + g22 t^2 = 0.
/// Requires g22 != 0 and a square discriminant.
inline std::optional<std::pair<Rational, Rational>> isotropic_slopes(const MatrixQ& g) {
  const Rational a = g(1, 1), b = 2 * g(0, 1), c = g(0, 0);
  if (a.is_zero()) return std::nullopt;
  const Rational disc = b * b - 4 * a * c;
  if (disc.sign() <= 0) return std::nullopt;
  const Integer num = boost::multiprecision::numerator(disc), den = boost::multiprecision::denominator(disc);
  const Integer sn = boost::multiprecision::sqrt(num), sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  const Rational root(sn, sd);
  return std::make_pair((-b - root) / (2 * a), (-b + root) / (2 * a));
}

/// (L1 + t L2)^k by the binomial theorem.
inline PolynomialQ binomial_power(const Rational& t, int k) {
  PolynomialQ p(2);
  Integer binom = 1;
  Rational tp = 1;
  for (int j = 0; j <= k; ++j) {
    p.add_term({k - j, j}, Rational(binom) * tp);
    binom = binom * (k - j) / (j + 1);
    tp *= t;
  }
  return p;
}

}  // namespace hklat::testing
