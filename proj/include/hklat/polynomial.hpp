#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <unordered_map>
#include <vector>

#include "hklat/linalg.hpp"

namespace hklat {

/// Exponent multi-index over the divisor basis L_1, ..., L_rho.
using Exponents = std::vector<int>;

/// Sparse polynomial in the divisor symbols L_1..L_rho, i.e. an element of
/// Sym*(NS_Q) or of its extension of scalars. Zero coefficients are never
/// stored.
template <typename Scalar>
class DivisorPolynomial {
 public:
  explicit DivisorPolynomial(std::size_t variables) : variables_(variables) {}

  std::size_t variables() const { return variables_; }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& exps, const Scalar& coef) {
    if (exps.size() != variables_) throw Error(ErrorKind::kShape, "exponent vector of wrong length");
    for (int e : exps) {
      if (e < 0) throw Error(ErrorKind::kDomain, "negative exponent");
    }
    if (hklat::is_zero(coef)) return;
    auto [it, inserted] = terms_.try_emplace(exps, coef);
    if (!inserted) {
      it->second += coef;
      if (hklat::is_zero(it->second)) terms_.erase(it);
    }
  }

  Scalar coefficient(const Exponents& exps) const {
    const auto it = terms_.find(exps);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  /// Common degree of all terms; nullopt for the zero polynomial or a
  /// non-homogeneous one.
  std::optional<int> degree() const {
    std::optional<int> deg;
    for (const auto& [exps, coef] : terms_) {
      int d = 0;
      for (int e : exps) d += e;
      if (deg && *deg != d) return std::nullopt;
      deg = d;
    }
    return deg;
  }

  DivisorPolynomial& operator+=(const DivisorPolynomial& o) {
    check_compatible(o);
    for (const auto& [exps, coef] : o.terms_) add_term(exps, coef);
    return *this;
  }
  DivisorPolynomial& operator-=(const DivisorPolynomial& o) {
    check_compatible(o);
    for (const auto& [exps, coef] : o.terms_) add_term(exps, -coef);
    return *this;
  }
  DivisorPolynomial& operator*=(const Scalar& c) {
    if (hklat::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [exps, coef] : terms_) coef *= c;
    return *this;
  }

  friend DivisorPolynomial operator+(DivisorPolynomial x, const DivisorPolynomial& y) { return x += y; }
  friend DivisorPolynomial operator-(DivisorPolynomial x, const DivisorPolynomial& y) { return x -= y; }
  friend DivisorPolynomial operator*(DivisorPolynomial x, const Scalar& c) { return x *= c; }

  friend DivisorPolynomial operator*(const DivisorPolynomial& x, const DivisorPolynomial& y) {
    x.check_compatible(y);
    DivisorPolynomial out(x.variables_);
    Exponents sum(x.variables_);
    for (const auto& [ex, cx] : x.terms_) {
      for (const auto& [ey, cy] : y.terms_) {
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ex[i] + ey[i];
        out.add_term(sum, cx * cy);
      }
    }
    return out;
  }

  friend bool operator==(const DivisorPolynomial& x, const DivisorPolynomial& y) {
    return x.variables_ == y.variables_ && x.terms_ == y.terms_;
  }

  /// Monomial prod L_i^{e_i} with coefficient 1.
  static DivisorPolynomial monomial(const Exponents& exps) {
    DivisorPolynomial p(exps.size());
    p.add_term(exps, Scalar(1));
    return p;
  }

 private:
  void check_compatible(const DivisorPolynomial& o) const {
    if (o.variables_ != variables_) throw Error(ErrorKind::kShape, "polynomials over different ranks");
  }

  std::size_t variables_;
  std::map<Exponents, Scalar> terms_;
};

using PolynomialQ = DivisorPolynomial<Rational>;
using PolynomialGauss = DivisorPolynomial<GaussianRational>;

/// All exponent vectors of total degree `degree` in `variables` variables,
/// in descending lexicographic order (L_1^degree first).
class MonomialBasis {
 public:
  MonomialBasis(std::size_t variables, int degree);

  std::size_t variables() const { return variables_; }
  int degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<Exponents>& monomials() const { return monomials_; }
  std::size_t index_of(const Exponents& exps) const;

  template <typename Scalar>
  Vector<Scalar> to_dense(const DivisorPolynomial<Scalar>& p) const {
    if (p.variables() != variables_) throw Error(ErrorKind::kShape, "polynomial over a different rank");
    Vector<Scalar> out = Vector<Scalar>::Zero(static_cast<Eigen::Index>(size()));
    for (const auto& [exps, coef] : p.terms()) out(static_cast<Eigen::Index>(index_of(exps))) = coef;
    return out;
  }

  template <typename Scalar>
  DivisorPolynomial<Scalar> from_dense(const Vector<Scalar>& v) const {
    DivisorPolynomial<Scalar> p(variables_);
    for (std::size_t i = 0; i < size(); ++i) p.add_term(monomials_[i], v(static_cast<Eigen::Index>(i)));
    return p;
  }

 private:
  struct Hash {
    std::size_t operator()(const Exponents& e) const noexcept;
  };

  std::size_t variables_;
  int degree_;
  std::vector<Exponents> monomials_;
  std::unordered_map<Exponents, std::size_t, Hash> index_;
};

/// C(variables + degree - 1, degree): dimension of Sym^degree of a
/// rank-`variables` space. Zero for negative degree.
Integer sym_dimension(std::size_t variables, int degree);

/// k! / prod e_i!
Integer multinomial(const Exponents& exps);

/// (sum_j v_j L_j)^k by multinomial expansion.
template <typename Scalar>
DivisorPolynomial<Scalar> power(const Vector<Scalar>& v, int k) {
  if (k < 0) throw Error(ErrorKind::kDomain, "negative power");
  const auto rho = static_cast<std::size_t>(v.size());
  DivisorPolynomial<Scalar> out(rho);
  const MonomialBasis basis(rho, k);
  for (const auto& exps : basis.monomials()) {
    Scalar coef{Rational(multinomial(exps))};
    for (std::size_t j = 0; j < rho; ++j) {
      for (int e = 0; e < exps[j]; ++e) coef *= v(static_cast<Eigen::Index>(j));
    }
    out.add_term(exps, coef);
  }
  return out;
}

PolynomialQ real_part(const PolynomialGauss& p);
PolynomialQ imag_part(const PolynomialGauss& p);

std::ostream& operator<<(std::ostream& os, const PolynomialQ& p);

}  // namespace hklat
