#include "hklat/polynomial.hpp"

#include <functional>

namespace hklat {

MonomialBasis::MonomialBasis(std::size_t variables, int degree) : variables_(variables), degree_(degree) {
  if (variables == 0) throw Error(ErrorKind::kShape, "monomials in zero variables");
  if (degree < 0) return;
  Exponents current(variables, 0);
  // Descending lex: give the earliest variable as much as possible first.
  std::function<void(std::size_t, int)> fill = [&](std::size_t i, int remaining) {
    if (i + 1 == variables) {
      current[i] = remaining;
      index_.emplace(current, monomials_.size());
      monomials_.push_back(current);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      current[i] = e;
      fill(i + 1, remaining - e);
    }
  };
  fill(0, degree);
}

std::size_t MonomialBasis::index_of(const Exponents& exps) const {
  const auto it = index_.find(exps);
  if (it == index_.end()) throw Error(ErrorKind::kDegree, "monomial not of degree " + std::to_string(degree_));
  return it->second;
}

std::size_t MonomialBasis::Hash::operator()(const Exponents& e) const noexcept {
  std::size_t h = e.size();
  for (int x : e) h = h * 1000003u ^ static_cast<std::size_t>(x);
  return h;
}

Integer sym_dimension(std::size_t variables, int degree) {
  if (degree < 0) return 0;
  // C(variables + degree - 1, degree)
  Integer out = 1;
  for (int i = 1; i <= degree; ++i) {
    out *= static_cast<long>(variables) - 1 + i;
    out /= i;
  }
  return out;
}

Integer multinomial(const Exponents& exps) {
  Integer out = 1;
  int total = 0;
  for (int e : exps) {
    for (int i = 1; i <= e; ++i) {
      ++total;
      out *= total;
      out /= i;
    }
  }
  return out;
}

PolynomialQ real_part(const PolynomialGauss& p) {
  PolynomialQ out(p.variables());
  for (const auto& [exps, coef] : p.terms()) out.add_term(exps, coef.re());
  return out;
}

PolynomialQ imag_part(const PolynomialGauss& p) {
  PolynomialQ out(p.variables());
  for (const auto& [exps, coef] : p.terms()) out.add_term(exps, coef.im());
  return out;
}

std::ostream& operator<<(std::ostream& os, const PolynomialQ& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [exps, coef] = *it;
    os << (first ? "" : " + ") << format_rational(coef);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      os << "*L" << i + 1;
      if (exps[i] > 1) os << "^" << exps[i];
    }
    first = false;
  }
  return os;
}

}  // namespace hklat
