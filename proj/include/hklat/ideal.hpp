#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hklat/lattice.hpp"
#include "hklat/polynomial.hpp"

namespace hklat {

/// alpha^(n+1) expanded over the divisor basis. Requires q(alpha) = 0, n >= 1.
template <typename Scalar>
DivisorPolynomial<Scalar> isotropic_power(const Lattice& lat, const Vector<Scalar>& alpha, int n) {
  if (n < 1) throw Error(ErrorKind::kParameter, "n >= 1");
  if (!is_zero(quadratic(lat, alpha))) throw Error(ErrorKind::kNotIsotropic, "q(alpha) != 0");
  return power(alpha, n + 1);
}

/// dim Sym^k(rho) - dim Sym^(2n-k)(rho): the dimension of the degree-k piece
/// of the ideal generated by isotropic (n+1)-st powers. Equals dim Sym^k
/// for k > 2n and 0 for k <= n.
Integer kernel_dimension(std::size_t rho, int n, int degree);

/// Degree-k piece of I = <alpha^(n+1) : q(alpha) = 0> in Sym*(NS_Q), stored
/// as a canonical reduced row echelon basis over the monomials of degree k.
class IdealBasis {
 public:
  IdealBasis(std::size_t rho, int n, int degree);

  std::size_t rho() const { return monomials_.variables(); }
  int n() const { return n_; }
  int degree() const { return monomials_.degree(); }
  const MonomialBasis& monomials() const { return monomials_; }
  const RowSpace<Rational>& span() const { return span_; }
  std::size_t dimension() const { return span_.rank(); }
  /// Generators as polynomials (the echelon rows).
  std::vector<PolynomialQ> generators() const;

  const Integer& target_dimension() const { return target_; }
  std::size_t samples_used() const { return samples_used_; }
  /// Non-empty when the dimension target could not be trusted.
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// Adds a polynomial of this degree to the span; true iff rank grew.
  bool add(const PolynomialQ& p);

 private:
  friend IdealBasis ideal_basis(const Lattice&, int, int, std::uint64_t);

  int n_;
  MonomialBasis monomials_;
  RowSpace<Rational> span_;
  Integer target_;
  std::size_t samples_used_ = 0;
  std::vector<std::string> warnings_;
};

/// Spans { alpha^(n+1) * m } over boundary samples alpha (the lattice's own
/// isotropic witness first, then sample_boundary_stream) and monomials m of
/// degree k - n - 1, until the rank reaches kernel_dimension(rho, n, k).
/// Degrees above 2n give the whole space.
///
/// Requires a hyperbolic lattice that is isotropic over Q and
/// n + 1 <= degree. Raises kNotStabilized when the sample budget runs out
/// below the target.
IdealBasis ideal_basis(const Lattice& lat, int n, int degree, std::uint64_t seed);

/// Sample budget used by ideal_basis for a given target dimension.
std::size_t ideal_sample_budget(const Integer& target);

/// p lies in the exact span of the basis. p must be homogeneous of the
/// basis degree (the zero polynomial is always a member).
bool contains(const IdealBasis& basis, const PolynomialQ& p);

/// Complexified membership: both real and imaginary parts lie in the span,
/// since the generators are rational.
bool contains(const IdealBasis& basis, const PolynomialGauss& p);

/// Checks that gamma^(n+1), gamma = alpha + i beta, lies in the complexified
/// degree-(n+1) kernel, given real data with q(alpha) = q(beta),
/// (alpha, beta) = 0, -q(chi) = q(alpha) and (chi, alpha) = 0 = (chi, beta).
/// Each violated identity is reported by name as kPrecondition.
bool complex_closure_check(const Lattice& lat, int n, const VectorQ& alpha, const VectorQ& beta,
                           const VectorQ& chi, std::uint64_t seed);

}  // namespace hklat
