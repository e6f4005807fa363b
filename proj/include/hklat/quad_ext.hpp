#pragma once

#include <ostream>
#include <string>

#include <Eigen/Core>

#include "hklat/rational.hpp"

namespace hklat {

/// Exact element a + b*sqrt(d) of Q(sqrt d), d a square-free positive integer.
///
/// d == 1 encodes a plain rational (b is folded into a). Values with different
/// radicands combine only when one side is rational; mixing two genuinely
/// different fields raises Error(kDomain).
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(int a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadExt(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadExt(const Rational& a, const Rational& b, const Integer& d);

  /// sqrt(r) for r >= 0, reduced to (s/q) * sqrt(d) with d square-free.
  static QuadExt sqrt(const Rational& r);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& d() const { return d_; }
  bool is_rational() const { return b_.is_zero(); }

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);
  QuadExt operator-() const;

  /// a^2 - d b^2
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend bool operator==(const QuadExt& x, const QuadExt& y);
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
  friend bool operator<(const QuadExt& x, const QuadExt& y);
  friend bool operator>(const QuadExt& x, const QuadExt& y) { return y < x; }
  friend bool operator<=(const QuadExt& x, const QuadExt& y) { return !(y < x); }
  friend bool operator>=(const QuadExt& x, const QuadExt& y) { return !(x < y); }

 private:
  void normalize();
  const Integer& common_radicand(const QuadExt& o) const;

  Rational a_{0};
  Rational b_{0};
  Integer d_{1};
};

/// Exact sign of a + b sqrt(d).
int sign(const QuadExt& x);
inline bool is_zero(const QuadExt& x) { return x.a().is_zero() && x.b().is_zero(); }
std::ostream& operator<<(std::ostream& os, const QuadExt& x);

/// Gaussian rational re + i*im. No ordering.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(const Rational& re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(const Rational& re, const Rational& im) : re_(re), im_(im) {}

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o);
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend GaussianRational operator+(GaussianRational x, const GaussianRational& y) { return x += y; }
  friend GaussianRational operator-(GaussianRational x, const GaussianRational& y) { return x -= y; }
  friend GaussianRational operator*(GaussianRational x, const GaussianRational& y) { return x *= y; }
  friend GaussianRational operator/(GaussianRational x, const GaussianRational& y) { return x /= y; }
  friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
    return x.re_ == y.re_ && x.im_ == y.im_;
  }
  friend bool operator!=(const GaussianRational& x, const GaussianRational& y) { return !(x == y); }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline bool is_zero(const GaussianRational& x) { return x.re().is_zero() && x.im().is_zero(); }
std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

}  // namespace hklat

namespace Eigen {

template <>
struct NumTraits<hklat::QuadExt> : GenericNumTraits<hklat::QuadExt> {
  using Real = hklat::QuadExt;
  using NonInteger = hklat::QuadExt;
  using Literal = hklat::QuadExt;
  using Nested = hklat::QuadExt;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = HugeCost,
    AddCost = HugeCost,
    MulCost = HugeCost
  };
};

// IsComplex stays 0: every pairing in this library is bilinear, never
// Hermitian, so Eigen must not conjugate these scalars.
template <>
struct NumTraits<hklat::GaussianRational> : GenericNumTraits<hklat::GaussianRational> {
  using Real = hklat::GaussianRational;
  using NonInteger = hklat::GaussianRational;
  using Literal = hklat::GaussianRational;
  using Nested = hklat::GaussianRational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = HugeCost,
    AddCost = HugeCost,
    MulCost = HugeCost
  };
};

}  // namespace Eigen
