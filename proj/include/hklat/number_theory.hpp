#pragma once

#include <utility>
#include <vector>

#include "hklat/rational.hpp"

namespace hklat {

/// Prime factorization of |n| (n != 0) as (prime, exponent) pairs in
/// increasing prime order. Trial division followed by Pollard-Brent rho with
/// Miller-Rabin primality checks.
std::vector<std::pair<Integer, int>> factorize(const Integer& n);

/// Distinct primes dividing |n|, ascending.
std::vector<Integer> prime_divisors(const Integer& n);

/// Largest k with p^k | n, n != 0.
int valuation(const Integer& n, const Integer& p);

/// Writes n = s^2 * f with f square-free (sign carried by f). n != 0.
std::pair<Integer, Integer> split_square(const Integer& n);

/// Square-free integer representative of the square class of a nonzero
/// rational.
Integer squarefree_class(const Rational& r);

bool is_square(const Integer& n);
bool is_square(const Rational& r);

/// Legendre symbol (a | p) for an odd prime p.
int legendre(const Integer& a, const Integer& p);

Integer isqrt(const Integer& n);

}  // namespace hklat
