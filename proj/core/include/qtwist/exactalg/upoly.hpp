#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qtwist/exactalg/laurent_poly.hpp"

namespace qtwist::exactalg {

/// Dense univariate polynomial over Z, coefficients from degree 0 upward.
/// Used where a genuine gcd is needed: clearing denominators in Z[m] and
/// squarefree parts of resultants.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<mpz_class> coeffs);

  /// Converts a polynomial in the single variable `v`; throws DomainError if
  /// other variables occur or any exponent is negative.
  static UPoly from_laurent(const LaurentPoly& p, Var v);
  LaurentPoly to_laurent(Var v) const;

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  const mpz_class& lead() const { return c_.back(); }
  mpz_class operator[](int i) const { return i >= 0 && i <= degree() ? c_[i] : mpz_class(0); }

  mpz_class content() const;
  /// Divides out the content and makes the leading coefficient positive.
  UPoly primitive_part() const;
  UPoly derivative() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly operator-() const;
  friend bool operator==(const UPoly&, const UPoly&) = default;

  /// lead(b)^(deg a - deg b + 1) * a mod b.
  static UPoly pseudo_remainder(const UPoly& a, const UPoly& b);

  /// Exact quotient over Z; throws InexactDivision on a remainder.
  static UPoly exact_quotient(const UPoly& a, const UPoly& b);

  /// Primitive gcd with positive leading coefficient (primitive PRS).
  static UPoly gcd(const UPoly& a, const UPoly& b);

  /// Primitive squarefree part p / gcd(p, p').
  UPoly squarefree_part() const;

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

}  // namespace qtwist::exactalg
