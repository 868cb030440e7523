#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

namespace qtwist::exactalg {

/// RAII wrapper over an MPFR real.  Every result is rounded to nearest at
/// the larger precision of its operands.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 128) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(double d, mpfr_prec_t prec) : Real(prec) { mpfr_set_d(v_, d, MPFR_RNDN); }
  Real(long i, mpfr_prec_t prec) : Real(prec) { mpfr_set_si(v_, i, MPFR_RNDN); }
  Real(const mpz_class& z, mpfr_prec_t prec) : Real(prec) { mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
  /// Parses a decimal string; throws DomainError if malformed.
  Real(const std::string& decimal, mpfr_prec_t prec);

  Real(const Real& o) : Real(o.prec()) { mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept : Real(mpfr_get_prec(o.v_)) { mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, o.prec());
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  static Real pi(mpfr_prec_t prec);
  /// 2^e at the given precision.
  static Real pow2(long e, mpfr_prec_t prec);

  Real with_prec(mpfr_prec_t prec) const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Fixed notation with `digits` significant digits.
  std::string to_string(int digits = 20) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// Binary exponent (value in [2^(e-1), 2^e)); very negative for zero.
  long exponent() const;

  Real operator-() const;
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  Real& operator+=(const Real& o) { return *this = *this + o; }
  Real& operator-=(const Real& o) { return *this = *this - o; }
  Real& operator*=(const Real& o) { return *this = *this * o; }
  Real& operator/=(const Real& o) { return *this = *this / o; }
  Real mul_si(long c) const;
  Real div_si(long c) const;

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return b <= a; }

 private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real max(const Real& a, const Real& b);

/// Arbitrary-precision complex number (HPComplex).
class Complex {
 public:
  explicit Complex(mpfr_prec_t prec = 128) : re_(prec), im_(prec) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  Complex(double re, double im, mpfr_prec_t prec) : re_(re, prec), im_(im, prec) {}
  explicit Complex(const Real& re) : re_(re), im_(re.prec()) {}

  /// r e^(i theta)
  static Complex polar(const Real& r, const Real& theta);
  /// exp(2 pi i num/den)
  static Complex root_of_unity(long num, long den, mpfr_prec_t prec);

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }
  Complex with_prec(mpfr_prec_t prec) const { return {re_.with_prec(prec), im_.with_prec(prec)}; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

  Complex operator-() const { return {-re_, -im_}; }
  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
  friend Complex operator*(const Complex& a, const Complex& b);
  friend Complex operator/(const Complex& a, const Complex& b);
  friend Complex operator*(const Complex& a, const Real& r) { return {a.re_ * r, a.im_ * r}; }
  friend Complex operator/(const Complex& a, const Real& r) { return {a.re_ / r, a.im_ / r}; }
  Complex& operator+=(const Complex& o) { return *this = *this + o; }
  Complex& operator-=(const Complex& o) { return *this = *this - o; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
  Complex& operator/=(const Complex& o) { return *this = *this / o; }
  Complex mul_si(long c) const { return {re_.mul_si(c), im_.mul_si(c)}; }
  Complex div_si(long c) const { return {re_.div_si(c), im_.div_si(c)}; }

  Complex conj() const { return {re_, -im_}; }
  Complex pow(long e) const;

  std::string to_string(int digits = 20) const;

 private:
  Real re_;
  Real im_;
};

Real abs(const Complex& z);
/// Squared modulus.
Real norm(const Complex& z);
/// Principal argument in (-pi, pi]; a negative zero imaginary part is read as +0.
Real arg(const Complex& z);
/// Principal logarithm.
Complex log(const Complex& z);
Complex exp(const Complex& z);
Complex sqrt(const Complex& z);

}  // namespace qtwist::exactalg
