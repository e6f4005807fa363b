#include "hklat/quad_ext.hpp"

#include "hklat/error.hpp"
#include "hklat/number_theory.hpp"

namespace hklat {

QuadExt::QuadExt(const Rational& a, const Rational& b, const Integer& d) : a_(a), b_(b), d_(d) {
  if (d_ <= 0) throw Error(ErrorKind::kDomain, "radicand must be positive");
  if (split_square(d_).first != 1) throw Error(ErrorKind::kDomain, "radicand must be square-free");
  normalize();
}

QuadExt QuadExt::sqrt(const Rational& r) {
  if (r.sign() < 0) throw Error(ErrorKind::kDomain, "sqrt of negative rational");
  if (r.is_zero()) return QuadExt();
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  // sqrt(num/den) = sqrt(num*den) / den
  const auto [s, f] = split_square(num * den);
  QuadExt out;
  out.d_ = f;
  out.b_ = Rational(s, den);
  out.normalize();
  return out;
}

void QuadExt::normalize() {
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  }
  if (b_.is_zero()) d_ = 1;
}

const Integer& QuadExt::common_radicand(const QuadExt& o) const {
  if (b_.is_zero()) return o.d_;
  if (o.b_.is_zero() || d_ == o.d_) return d_;
  throw Error(ErrorKind::kDomain, "mixing Q(sqrt " + d_.str() + ") and Q(sqrt " + o.d_.str() + ")");
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  d_ = common_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  d_ = common_radicand(o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  d_ = common_radicand(o);
  Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d_);
  b_ = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  normalize();
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  const Rational n = o.norm();
  if (n.is_zero()) throw Error(ErrorKind::kDomain, "division by zero in Q(sqrt d)");
  QuadExt conj = o;
  conj.b_ = -conj.b_;
  *this *= conj;
  a_ /= n;
  b_ /= n;
  return *this;
}

QuadExt QuadExt::operator-() const {
  QuadExt out = *this;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

bool operator==(const QuadExt& x, const QuadExt& y) {
  return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.d_ == y.d_);
}

bool operator<(const QuadExt& x, const QuadExt& y) { return sign(y - x) > 0; }

int sign(const QuadExt& x) {
  const int sa = x.a().sign();
  const int sb = x.b().sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with d b^2.
  const int cmp = x.norm().sign();
  return sa > 0 ? cmp : -cmp;
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) {
  os << format_rational(x.a());
  if (!x.is_rational()) os << " + " << format_rational(x.b()) << "*sqrt(" << x.d() << ")";
  return os;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational n = o.re_ * o.re_ + o.im_ * o.im_;
  if (n.is_zero()) throw Error(ErrorKind::kDomain, "division by zero Gaussian rational");
  *this *= GaussianRational(o.re_, -o.im_);
  re_ /= n;
  im_ /= n;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) {
  return os << format_rational(x.re()) << " + " << format_rational(x.im()) << "i";
}

}  // namespace hklat
