#pragma once

#include <map>
#include <string>

#include "qtwist/exactalg/laurent_poly.hpp"

namespace qtwist::exactalg {

/// Quotient of two Laurent polynomials.
///
/// Canonical form: the denominator is nonzero, carries no monomial factor
/// (its minimum exponent is 0 in every variable), the integer contents of
/// numerator and denominator are coprime, and the denominator's leading
/// coefficient is positive.  Only monomials and integer content are
/// cancelled; polynomial common factors may survive, so equality is decided
/// by cross-multiplication.
class RatFunc {
 public:
  RatFunc() : num_(0), den_(1) {}
  RatFunc(LaurentPoly num);  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(LaurentPoly(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  /// True when the canonical denominator is 1.
  bool is_polynomial() const { return den_ == LaurentPoly(1); }

  /// Exact quotient num/den; throws InexactDivision if it is not a Laurent
  /// polynomial.
  LaurentPoly to_poly() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc pow(int e) const;
  RatFunc inverse() const;

  /// Equality as rational functions (cross-multiplication).
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  /// Storage equality: identical canonical representatives.
  bool same_form(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  std::string to_string() const;

 private:
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

using Bindings = std::map<Var, RatFunc>;

/// Substitutes rational functions for variables.  Each bound variable is
/// homogenized over its own denominator: with x = a/b and exponents in
/// [lo, hi], a term x^e becomes a^(e-lo) b^(hi-e) over b^hi a^-lo.
/// Throws DomainError if a denominator becomes identically zero.
RatFunc substitute(const RatFunc& f, const Bindings& bindings);
RatFunc substitute(const LaurentPoly& f, const Bindings& bindings);

}  // namespace qtwist::exactalg
