#include "hklat/number_theory.hpp"

#include <algorithm>
#include <map>

#include <boost/multiprecision/miller_rabin.hpp>
#include <gmp.h>

#include "hklat/error.hpp"

namespace hklat {
namespace {

constexpr unsigned kTrialLimit = 1u << 16;

bool is_probable_prime(const Integer& n) {
  return boost::multiprecision::miller_rabin_test(n, 30);
}

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

// Pollard-Brent; n odd composite.
Integer find_factor(const Integer& n) {
  for (Integer c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    const auto f = [&](const Integer& v) { return (v * v + c) % n; };
    std::size_t r = 1;
    constexpr std::size_t m = 128;
    while (g == 1) {
      x = y;
      for (std::size_t i = 0; i < r; ++i) y = f(y);
      std::size_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (std::size_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = (q * abs(x - y)) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Integer& n, std::map<Integer, int>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  const Integer f = find_factor(n);
  factor_into(f, out);
  factor_into(n / f, out);
}

}  // namespace

std::vector<std::pair<Integer, int>> factorize(const Integer& n) {
  if (n == 0) throw Error(ErrorKind::kDomain, "factorize(0)");
  std::map<Integer, int> found;
  Integer m = abs(n);
  for (unsigned p = 2; p < kTrialLimit && Integer(p) * p <= m; p += (p == 2 ? 1 : 2)) {
    while (m % p == 0) {
      ++found[Integer(p)];
      m /= p;
    }
  }
  if (m > 1) factor_into(m, found);
  return {found.begin(), found.end()};
}

std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> primes;
  for (const auto& [p, e] : factorize(n)) primes.push_back(p);
  return primes;
}

int valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw Error(ErrorKind::kDomain, "valuation of 0");
  int k = 0;
  Integer m = n;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  return k;
}

std::pair<Integer, Integer> split_square(const Integer& n) {
  Integer s = 1, f = n.sign() < 0 ? -1 : 1;
  for (const auto& [p, e] : factorize(n)) {
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) f *= p;
  }
  return {s, f};
}

Integer squarefree_class(const Rational& r) {
  if (r.is_zero()) throw Error(ErrorKind::kDomain, "square class of 0");
  const Integer prod = boost::multiprecision::numerator(r) * boost::multiprecision::denominator(r);
  return split_square(prod).second;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw Error(ErrorKind::kDomain, "isqrt of negative");
  return boost::multiprecision::sqrt(n);
}

bool is_square(const Integer& n) {
  if (n < 0) return false;
  const Integer s = isqrt(n);
  return s * s == n;
}

bool is_square(const Rational& r) {
  return is_square(boost::multiprecision::numerator(r)) &&
         is_square(boost::multiprecision::denominator(r));
}

int legendre(const Integer& a, const Integer& p) {
  return mpz_legendre(a.backend().data(), p.backend().data());
}

}  // namespace hklat
