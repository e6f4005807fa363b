#include "hklat/isotropy.hpp"

#include <cmath>
#include <cstdint>
#include <set>
#include <sstream>

#include <boost/multiprecision/miller_rabin.hpp>

#include "hklat/number_theory.hpp"

namespace hklat {
namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

// Integer in the same square class as r.
Integer integral_representative(const Rational& r) { return numerator(r) * denominator(r); }

Integer mod_positive(const Integer& x, long m) {
  Integer r = x % m;
  if (r < 0) r += m;
  return r;
}

// epsilon(u) = (u-1)/2 mod 2 and omega(u) = (u^2-1)/8 mod 2 for odd u.
int epsilon2(const Integer& u) {
  const Integer r = mod_positive(u, 4);
  return r == 3 ? 1 : 0;
}
int omega2(const Integer& u) {
  const Integer r = mod_positive(u, 8);
  return (r == 3 || r == 5) ? 1 : 0;
}

bool is_square_at(const Integer& x, const LocalPlace& place) {
  if (place.is_infinite()) return x > 0;
  const Integer& p = place.p();
  const int alpha = valuation(x, p);
  if (alpha % 2) return false;
  Integer u = x;
  for (int i = 0; i < alpha; ++i) u /= p;
  if (p == 2) return mod_positive(u, 8) == 1;
  return legendre(u, p) == 1;
}

}  // namespace

LocalPlace LocalPlace::prime(const Integer& p) {
  if (p < 2 || !boost::multiprecision::miller_rabin_test(p, 30)) {
    throw Error(ErrorKind::kDomain, p.str() + " is not prime");
  }
  LocalPlace out;
  out.prime_ = p;
  return out;
}

int hilbert_symbol(const Rational& a, const Rational& b, const LocalPlace& place) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorKind::kDomain, "Hilbert symbol of zero");
  if (place.is_infinite()) return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;

  const Integer& p = place.p();
  Integer u = integral_representative(a);
  Integer v = integral_representative(b);
  const int alpha = valuation(u, p);
  const int beta = valuation(v, p);
  for (int i = 0; i < alpha; ++i) u /= p;
  for (int i = 0; i < beta; ++i) v /= p;

  if (p == 2) {
    const int e = epsilon2(u) * epsilon2(v) + alpha * omega2(v) + beta * omega2(u);
    return e % 2 ? -1 : 1;
  }
  int result = 1;
  if (alpha % 2 && beta % 2 && mod_positive(p, 4) == 3) result = -result;
  if (beta % 2) result *= legendre(u, p);
  if (alpha % 2) result *= legendre(v, p);
  return result;
}

bool is_locally_isotropic(std::span<const Rational> diagonal, const LocalPlace& place) {
  const std::size_t r = diagonal.size();
  if (r <= 1) return false;
  if (place.is_infinite()) {
    bool pos = false, neg = false;
    for (const auto& a : diagonal) (a.sign() > 0 ? pos : neg) = true;
    return pos && neg;
  }
  if (r >= 5) return true;

  Integer d = 1;
  for (const auto& a : diagonal) d *= integral_representative(a);
  int hasse = 1;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) hasse *= hilbert_symbol(diagonal[i], diagonal[j], place);
  }
  switch (r) {
    case 2: return is_square_at(-d, place);
    case 3: return hilbert_symbol(Rational(-1), Rational(-d), place) == hasse;
    default: return !is_square_at(d, place) || hasse == hilbert_symbol(Rational(-1), Rational(-1), place);
  }
}

std::vector<LocalPlace> relevant_places(std::span<const Rational> diagonal) {
  std::set<Integer> primes = {Integer(2)};
  for (const auto& a : diagonal) {
    for (const auto& p : prime_divisors(integral_representative(a))) primes.insert(p);
  }
  std::vector<LocalPlace> places = {LocalPlace::infinity()};
  for (const auto& p : primes) places.push_back(LocalPlace::prime(p));
  return places;
}

bool is_isotropic_diagonal(std::span<const Rational> diagonal) {
  for (const auto& a : diagonal) {
    if (a.is_zero()) throw Error(ErrorKind::kDegenerate, "diagonal form has a zero entry");
  }
  const std::size_t r = diagonal.size();
  if (r <= 1) return false;
  if (!is_locally_isotropic(diagonal, LocalPlace::infinity())) return false;
  if (r >= 5) return true;
  if (r == 2) return is_square(Rational(-diagonal[0] * diagonal[1]));
  for (const auto& place : relevant_places(diagonal)) {
    if (!is_locally_isotropic(diagonal, place)) return false;
  }
  return true;
}

bool is_isotropic(const Lattice& lat) {
  const auto diag = diagonalize(lat.gram()).diagonal;
  return is_isotropic_diagonal(diag);
}

namespace {

// Depth-first colex enumeration of one max-norm shell over nonnegative
// magnitudes. Sign branches are never needed: the zero set of a diagonal
// form is closed under coordinate sign flips, so whenever a subtree headed
// by -m holds a zero, the one headed by +m (visited first) holds its mirror.
template <typename Int>
class ShellSearch {
 public:
  ShellSearch(std::vector<Int> coeffs, Int shell)
      : c_(std::move(coeffs)), n_(c_.size()), shell_(shell), x_(n_, 0), lo_(n_), hi_(n_) {
    Int lo = 0, hi = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      (c_[i] < 0 ? lo : hi) += c_[i];
      lo_[i] = lo * shell_ * shell_;
      hi_[i] = hi * shell_ * shell_;
    }
  }

  bool run() { return descend(n_ - 1, 0, false); }
  const std::vector<Int>& hit() const { return x_; }

 private:
  bool descend(std::size_t k, const Int& partial, bool on_shell) {
    const Int need = -partial;  // sum_{i<=k} c_i x_i^2 must equal this
    if (need < lo_[k] || need > hi_[k]) return false;
    if (k == 0) return solve_last(need, on_shell);
    for (Int m = 0; m <= shell_; ++m) {
      x_[k] = m;
      if (descend(k - 1, partial + c_[k] * m * m, on_shell || m == shell_)) return true;
    }
    x_[k] = 0;
    return false;
  }

  bool solve_last(const Int& need, bool on_shell) {
    if (need % c_[0] != 0) return false;
    const Int sq = need / c_[0];
    if (sq < 0) return false;
    const Int t = root(sq);
    if (t * t != sq || t > shell_) return false;
    if (!on_shell && t != shell_) return false;
    x_[0] = t;
    return true;  // nonzero: shell_ >= 1 is attained by some coordinate
  }

  static Int root(const Int& v) {
    if constexpr (std::is_same_v<Int, std::int64_t>) {
      auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
      while (r > 0 && r * r > v) --r;
      while ((r + 1) * (r + 1) <= v) ++r;
      return r;
    } else {
      return isqrt(v);
    }
  }

  std::vector<Int> c_;
  std::size_t n_;
  Int shell_;
  std::vector<Int> x_;
  std::vector<Int> lo_, hi_;

};
// Colex enumeration of one max-norm shell for a general integral form F in
// its own coordinates, digits ordered 0, 1, -1, 2, -2, ... The first
// coordinate is solved from F_00 x0^2 + 2 b x0 + c = 0.
template <typename Int>
class GeneralShellSearch {
 public:
  GeneralShellSearch(std::vector<std::vector<Int>> f, Int shell)
      : f_(std::move(f)), n_(f_.size()), shell_(shell), x_(n_, 0) {}

  bool run() { return descend(n_ - 1, 0, 0, false); }
  const std::vector<Int>& hit() const { return x_; }

 private:
  // b = sum_{i>k} F_0i x_i and c = q restricted to the coordinates above k.
  bool descend(std::size_t k, const Int& b, const Int& c, bool on_shell) {
    if (k == 0) return solve_first(b, c, on_shell);
    Int cross = 0;
    for (std::size_t j = k + 1; j < n_; ++j) cross += f_[k][j] * x_[j];
    for (Int m = 0; m <= shell_; ++m) {
      for (int s = 1; s >= -1; s -= 2) {
        const Int v = s > 0 ? m : Int(-m);
        x_[k] = v;
        if (descend(k - 1, b + f_[0][k] * v, c + f_[k][k] * v * v + 2 * v * cross, on_shell || m == shell_)) {
          return true;
        }
        if (m == 0) break;
      }
    }
    x_[k] = 0;
    return false;
  }

  bool accept(const Int& x0, bool on_shell) {
    const Int mag = x0 < 0 ? Int(-x0) : x0;
    if (mag > shell_ || (!on_shell && mag != shell_)) return false;
    x_[0] = x0;
    return true;
  }

  bool solve_first(const Int& b, const Int& c, bool on_shell) {
    const Int& a = f_[0][0];
    if (a == 0) {
      if (b == 0) return c == 0 && accept(on_shell ? Int(0) : shell_, on_shell);
      if (c % (2 * b) != 0) return false;
      return accept(Int(-c / (2 * b)), on_shell);
    }
    const Int disc = b * b - a * c;
    if (disc < 0) return false;
    const Int s = root(disc);
    if (s * s != disc) return false;
    // Roots (-b +- s) / a, tried in digit order.
    Int roots[2];
    int count = 0;
    for (const Int& num : {Int(-b + s), Int(-b - s)}) {
      if (num % a == 0) roots[count++] = num / a;
    }
    if (count == 2 && digit_before(roots[1], roots[0])) std::swap(roots[0], roots[1]);
    for (int i = 0; i < count; ++i) {
      if (accept(roots[i], on_shell)) return true;
    }
    return false;
  }

  static bool digit_before(const Int& u, const Int& v) {
    const Int au = u < 0 ? Int(-u) : u, av = v < 0 ? Int(-v) : v;
    return au != av ? au < av : u > v;
  }

  static Int root(const Int& v) {
    if constexpr (std::is_same_v<Int, std::int64_t>) {
      auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
      while (r > 0 && r * r > v) --r;
      while ((r + 1) * (r + 1) <= v) ++r;
      return r;
    } else {
      return isqrt(v);
    }
  }

  std::vector<std::vector<Int>> f_;
  std::size_t n_;
  Int shell_;
  std::vector<Int> x_;
};

template <typename Int>
std::vector<Int> narrow(const std::vector<Integer>& v) {
  std::vector<Int> out;
  for (const auto& x : v) out.push_back(Int(x.convert_to<Int>()));
  return out;
}

template <typename Int>
std::vector<std::vector<Int>> narrow(const std::vector<std::vector<Integer>>& m) {
  std::vector<std::vector<Int>> out;
  for (const auto& row : m) out.push_back(narrow<Int>(row));
  return out;
}

// One shell of either search; 64-bit arithmetic when every intermediate is
// bounded by `magnitude` < 2^61.
template <template <typename> class Search, typename Coeffs>
std::optional<std::vector<Integer>> search_shell(const Coeffs& coeffs, const Integer& shell, const Integer& magnitude) {
  std::vector<Integer> out;
  if (magnitude < (Integer(1) << 61)) {
    Search<std::int64_t> search(narrow<std::int64_t>(coeffs), shell.convert_to<std::int64_t>());
    if (!search.run()) return std::nullopt;
    for (auto v : search.hit()) out.emplace_back(v);
    return out;
  }
  Search<Integer> search(coeffs, shell);
  if (!search.run()) return std::nullopt;
  return search.hit();
}

Integer cassels_bound(const Integer& height, std::size_t n) {
  const Integer base = 3 * height;
  if ((n - 1) % 2 == 0) return boost::multiprecision::pow(base, static_cast<unsigned>((n - 1) / 2));
  return isqrt(boost::multiprecision::pow(base, static_cast<unsigned>(n - 1)));
}

bool is_diagonal(const MatrixQ& g) {
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      if (i != j && !g(i, j).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

IsotropySearch find_isotropic_vector(const Lattice& lat) {
  IsotropySearch result;
  if (!is_isotropic(lat)) {
    result.bound_used = "none: anisotropic by local tests";
    return result;
  }

  const MatrixQ& gram = lat.gram();
  const std::size_t n = lat.rank();
  Integer scale = 1;
  for (Eigen::Index i = 0; i < gram.rows(); ++i) {
    for (Eigen::Index j = 0; j < gram.cols(); ++j) scale = boost::multiprecision::lcm(scale, denominator(gram(i, j)));
  }
  std::vector<std::vector<Integer>> f(n, std::vector<Integer>(n));
  Integer height = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& g = gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      f[i][j] = numerator(g) * (scale / denominator(g));
      height += abs(f[i][j]);
    }
  }
  const bool diagonal = is_diagonal(gram);
  const Integer bound = cassels_bound(height, n);

  std::ostringstream desc;
  desc << "cassels max-norm bound (3H)^((n-1)/2) = " << bound << " with H = " << height << ", n = " << n
       << " on the integral form " << scale << " * G";

  std::vector<Integer> coeffs;
  if (diagonal) {
    for (std::size_t i = 0; i < n; ++i) coeffs.push_back(f[i][i]);
  }
  for (Integer shell = 1; shell <= bound; ++shell) {
    // |b|, |c| <= H N^2 and b^2, a c <= (H N)^2.
    const Integer magnitude = diagonal ? Integer(height * shell * shell) : Integer(height * height * shell * shell);
    const auto hit = diagonal ? search_shell<ShellSearch>(coeffs, shell, magnitude)
                              : search_shell<GeneralShellSearch>(f, shell, magnitude);
    if (!hit) continue;
    VectorQ x(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) x(static_cast<Eigen::Index>(i)) = Rational((*hit)[i]);
    x = primitive(x);
    if (!quadratic(lat, x).is_zero()) {
      throw Error(ErrorKind::kInternal, "witness failed exact re-verification");
    }
    desc << "; reached max-norm " << shell;
    result.witness = IsotropyWitness{x, true};
    result.bound_used = desc.str();
    return result;
  }
  throw Error(ErrorKind::kInternal, "bound violated: no zero with max-norm <= " + bound.str() +
                                        " although the local tests say isotropic");
}

}  // namespace hklat
