#include "hklat/ideal.hpp"

#include "hklat/cones.hpp"
#include "hklat/isotropy.hpp"

namespace hklat {

Integer kernel_dimension(std::size_t rho, int n, int degree) {
  if (degree <= n) return 0;
  if (degree > 2 * n) return sym_dimension(rho, degree);
  return sym_dimension(rho, degree) - sym_dimension(rho, 2 * n - degree);
}

IdealBasis::IdealBasis(std::size_t rho, int n, int degree)
    : n_(n),
      monomials_(rho, degree),
      span_(monomials_.size()),
      target_(kernel_dimension(rho, n, degree)) {}

std::vector<PolynomialQ> IdealBasis::generators() const {
  std::vector<PolynomialQ> out;
  out.reserve(span_.rank());
  for (const auto& row : span_.rows()) out.push_back(monomials_.from_dense(row));
  return out;
}

bool IdealBasis::add(const PolynomialQ& p) {
  if (p.is_zero()) return false;
  if (p.degree() != degree()) throw Error(ErrorKind::kDegree, "expected degree " + std::to_string(degree()));
  return span_.insert(monomials_.to_dense(p));
}

std::size_t ideal_sample_budget(const Integer& target) {
  return 8 * target.convert_to<std::size_t>() + 32;
}

namespace {

// Positive-norm reference class: a diagonalizing basis vector with positive
// pivot.
VectorQ positive_reference(const Lattice& lat) {
  const Diagonalization diag = diagonalize(lat.gram());
  for (std::size_t i = 0; i < diag.diagonal.size(); ++i) {
    if (diag.diagonal[i].sign() > 0) return primitive(VectorQ(diag.basis.col(static_cast<Eigen::Index>(i))));
  }
  throw Error(ErrorKind::kSignature, "no positive direction");
}

}  // namespace

IdealBasis ideal_basis(const Lattice& lat, int n, int degree, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::kParameter, "n >= 1");
  if (degree < n + 1) {
    throw Error(ErrorKind::kDegree, "degree " + std::to_string(degree) + " below n + 1 = " + std::to_string(n + 1));
  }
  require_hyperbolic(lat);
  const auto search = find_isotropic_vector(lat);
  if (!search.witness) throw Error(ErrorKind::kNoIsotropicClasses, "lattice is anisotropic over Q");

  IdealBasis basis(lat.rank(), n, degree);
  if (degree > 2 * n) {
    for (const auto& m : basis.monomials().monomials()) basis.add(PolynomialQ::monomial(m));
    return basis;
  }

  const VectorQ h = positive_reference(lat);
  VectorQ alpha = search.witness->vector;
  if (bilinear(lat, alpha, h).sign() < 0) alpha = -alpha;

  const Integer& target = basis.target_;
  const std::size_t budget = ideal_sample_budget(target);
  const MonomialBasis cofactors(lat.rank(), degree - n - 1);
  BoundarySampler sampler(lat, alpha, h, seed);

  VectorQ sample = alpha;
  bool exceeded = false;
  for (std::size_t used = 0; used < budget; ++used) {
    if (used > 0) sample = sampler.next();
    const PolynomialQ p = isotropic_power(lat, sample, n);
    for (const auto& m : cofactors.monomials()) basis.add(p * PolynomialQ::monomial(m));
    basis.samples_used_ = used + 1;
    if (basis.dimension() == target && !exceeded) return basis;
    if (basis.dimension() > target) exceeded = true;
  }
  if (exceeded) {
    basis.warnings_.push_back("span dimension " + std::to_string(basis.dimension()) +
                              " exceeded target " + target.str() + "; basis is budget-based");
    return basis;
  }
  throw Error(ErrorKind::kNotStabilized, "reached dimension " + std::to_string(basis.dimension()) +
                                             " of target " + target.str() + " after " +
                                             std::to_string(budget) + " samples");
}

bool contains(const IdealBasis& basis, const PolynomialQ& p) {
  if (p.is_zero()) return true;
  if (p.degree() != basis.degree()) {
    throw Error(ErrorKind::kDegree, "polynomial is not homogeneous of degree " + std::to_string(basis.degree()));
  }
  return basis.span().contains(basis.monomials().to_dense(p));
}

bool contains(const IdealBasis& basis, const PolynomialGauss& p) {
  if (p.is_zero()) return true;
  if (p.degree() != basis.degree()) {
    throw Error(ErrorKind::kDegree, "polynomial is not homogeneous of degree " + std::to_string(basis.degree()));
  }
  return contains(basis, real_part(p)) && contains(basis, imag_part(p));
}

bool complex_closure_check(const Lattice& lat, int n, const VectorQ& alpha, const VectorQ& beta,
                           const VectorQ& chi, std::uint64_t seed) {
  const Rational qa = quadratic(lat, alpha);
  if (qa != quadratic(lat, beta)) throw Error(ErrorKind::kPrecondition, "q(alpha) = q(beta)");
  if (!bilinear(lat, alpha, beta).is_zero()) throw Error(ErrorKind::kPrecondition, "(alpha, beta) = 0");
  if (-quadratic(lat, chi) != qa) throw Error(ErrorKind::kPrecondition, "-q(chi) = q(alpha)");
  if (!bilinear(lat, chi, alpha).is_zero()) throw Error(ErrorKind::kPrecondition, "(chi, alpha) = 0");
  if (!bilinear(lat, chi, beta).is_zero()) throw Error(ErrorKind::kPrecondition, "(chi, beta) = 0");

  Vector<GaussianRational> gamma(alpha.size());
  for (Eigen::Index i = 0; i < alpha.size(); ++i) gamma(i) = GaussianRational(alpha(i), beta(i));
  if (!is_zero(quadratic(lat, gamma))) {
    throw Error(ErrorKind::kInternal, "q(alpha + i beta) != 0 despite the relations");
  }
  const IdealBasis basis = ideal_basis(lat, n, n + 1, seed);
  return contains(basis, isotropic_power(lat, gamma, n));
}

}  // namespace hklat
