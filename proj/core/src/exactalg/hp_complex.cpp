#include "qtwist/exactalg/hp_complex.hpp"

#include <cstdio>
#include <vector>

#include "qtwist/errors.hpp"

namespace qtwist::exactalg {

namespace {

mpfr_prec_t join(const Real& a, const Real& b) { return std::max(a.prec(), b.prec()); }

}  // namespace

Real::Real(const std::string& decimal, mpfr_prec_t prec) : Real(prec) {
  if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    throw DomainError("malformed decimal number '" + decimal + "'");
  }
}

Real Real::pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::pow2(long e, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

Real Real::with_prec(mpfr_prec_t prec) const {
  Real r(prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string Real::to_string(int digits) const {
  if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  std::vector<char> buf(digits + 64);
  const long e = is_zero() ? 0 : exponent();
  const bool fixed = e > -10 && e < 64;
  int decimals = digits;
  if (fixed && !is_zero()) {
    Real a = abs(*this);
    Real ten(10L, 64);
    int int_digits = 1;
    for (Real t(10L, prec()); a >= t; t *= ten) ++int_digits;
    decimals = std::max(0, digits - int_digits);
  }
  int n = fixed ? mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", decimals, v_)
                : mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  if (n >= static_cast<int>(buf.size())) {
    buf.resize(n + 1);
    fixed ? mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", decimals, v_)
          : mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  }
  return buf.data();
}

long Real::exponent() const {
  if (is_zero()) return mpfr_get_emin();
  return mpfr_get_exp(v_);
}

Real Real::operator-() const {
  Real r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real Real::mul_si(long c) const {
  Real r(prec());
  mpfr_mul_si(r.v_, v_, c, MPFR_RNDN);
  return r;
}

Real Real::div_si(long c) const {
  Real r(prec());
  mpfr_div_si(r.v_, v_, c, MPFR_RNDN);
  return r;
}

Real abs(const Real& x) {
  Real r(x.prec());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  Real r(x.prec());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real log(const Real& x) {
  Real r(x.prec());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real exp(const Real& x) {
  Real r(x.prec());
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real sin(const Real& x) {
  Real r(x.prec());
  mpfr_sin(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real cos(const Real& x) {
  Real r(x.prec());
  mpfr_cos(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r(join(x, y));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Complex Complex::polar(const Real& r, const Real& theta) {
  Real s(theta.prec()), c(theta.prec());
  mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
  return {r * c, r * s};
}

Complex Complex::root_of_unity(long num, long den, mpfr_prec_t prec) {
  if (den == 0) throw DomainError("root of unity with zero order");
  num %= den;
  if (num < 0) num += den;
  if (num == 0) return Complex(1.0, 0.0, prec);
  if (2 * num == den) return Complex(-1.0, 0.0, prec);
  if (4 * num == den) return Complex(0.0, 1.0, prec);
  if (4 * num == 3 * den) return Complex(0.0, -1.0, prec);
  Real theta = Real::pi(prec + 16).mul_si(2 * num).div_si(den);
  Complex z = polar(Real(1L, prec + 16), theta);
  return z.with_prec(prec);
}

Complex operator*(const Complex& a, const Complex& b) {
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

Complex operator/(const Complex& a, const Complex& b) {
  Real d = norm(b);
  if (d.is_zero()) throw DomainError("complex division by zero");
  return {(a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d};
}

Complex Complex::pow(long e) const {
  if (e < 0) return Complex(Real(1L, prec())) / pow(-e);
  Complex result(Real(1L, prec()));
  Complex base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string Complex::to_string(int digits) const {
  std::string im = im_.to_string(digits);
  if (im.front() == '-') return re_.to_string(digits) + " - " + im.substr(1) + "i";
  return re_.to_string(digits) + " + " + im + "i";
}

Real norm(const Complex& z) { return z.re() * z.re() + z.im() * z.im(); }

Real abs(const Complex& z) {
  Real r(z.prec());
  mpfr_hypot(r.get(), z.re().get(), z.im().get(), MPFR_RNDN);
  return r;
}

Real arg(const Complex& z) {
  if (z.im().is_zero()) {
    if (z.re().sign() < 0) return Real::pi(z.prec());
    return Real(z.prec());
  }
  return atan2(z.im(), z.re());
}

Complex log(const Complex& z) {
  if (z.is_zero()) throw DomainError("logarithm of zero");
  return {log(abs(z)), arg(z)};
}

Complex exp(const Complex& z) { return Complex::polar(exp(z.re()), z.im()); }

Complex sqrt(const Complex& z) {
  if (z.is_zero()) return z;
  Real r = abs(z);
  Real a = sqrt((r + abs(z.re())).div_si(2));
  Real b = abs(z.im()) / a.mul_si(2);
  if (z.re().sign() >= 0) return {a, z.im().sign() < 0 ? -b : b};
  return {b, z.im().sign() < 0 ? -a : a};
}

}  // namespace qtwist::exactalg
