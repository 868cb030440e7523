#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtwist/exactalg/monomial.hpp"

namespace qtwist::exactalg {

struct Term {
  Monomial mono;
  mpz_class coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Multivariate Laurent polynomial with arbitrary-precision integer
/// coefficients.
///
/// Terms are kept sorted by ascending monomial with equal monomials merged
/// and no zero coefficients, so two equal polynomials always have identical
/// storage.  Every constructor and operator returns a canonical value.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const mpz_class& c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Monomial& m, const mpz_class& c = 1);
  static LaurentPoly variable(Var v, int e = 1) { return monomial(Monomial::of(v, e)); }
  /// Canonicalizes an arbitrary term list (merge, drop zeros, sort).
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return is_zero() || (is_monomial() && terms_[0].mono.is_one()); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Largest / smallest term in the monomial order.  Precondition: nonzero.
  const Term& leading() const { return terms_.back(); }
  const Term& trailing() const { return terms_.front(); }

  /// Degree bounds in one variable; 0 for the zero polynomial.
  int max_degree(Var v) const;
  int min_degree(Var v) const;
  bool uses(Var v) const;

  /// Per-variable minimum exponents (the largest monomial dividing every term).
  Monomial min_monomial() const;

  /// gcd of the coefficients (non-negative; 0 for the zero polynomial).
  mpz_class content() const;

  /// Constant term as an integer (coefficient of the unit monomial).
  mpz_class constant_term() const;

  /// Coefficient of v^e viewed as a polynomial in the remaining variables.
  LaurentPoly coefficient(Var v, int e) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly times(const Monomial& m, const mpz_class& c = 1) const;
  /// Divides every coefficient by `c`; throws InexactDivision if any does not divide.
  LaurentPoly divided_by(const mpz_class& c) const;

  /// Integer power.  Negative exponents are only defined for monomials.
  LaurentPoly pow(int e) const;

  /// Replace every occurrence of `v` by `value`.  Negative exponents of `v`
  /// require `value` to be a monomial.
  LaurentPoly substitute(Var v, const LaurentPoly& value) const;

  /// Exponent map: each monomial is sent through `f`.  Used for the cheap
  /// bindings N -> q^n, q -> s^2 and the like.
  template <typename F>
  LaurentPoly map_monomials(F&& f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      auto [mono, c] = f(t.mono);
      out.push_back({mono, t.coeff * c});
    }
    return from_terms(std::move(out));
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Human-readable text form, leading term first: `l + m^6`.
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Returns q with q*b == a, or std::nullopt if b does not divide a in the
/// Laurent ring.  Precondition: b != 0.
std::optional<LaurentPoly> try_divide(const LaurentPoly& a, const LaurentPoly& b);

/// As try_divide, but throws InexactDivision on a nonzero remainder.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// Multiplies p by the monomial that makes its minimum exponent 0 in every
/// variable; returns the removed monomial through `removed` if given.
LaurentPoly strip_monomial(const LaurentPoly& p, Monomial* removed = nullptr);

/// The signed monomial u = +-mono with a == u * b, if one exists.  Both
/// arguments must be nonzero.
std::optional<Term> unit_ratio(const LaurentPoly& a, const LaurentPoly& b);

/// Product of a range of polynomials, balanced to keep intermediate sizes low.
LaurentPoly product(std::vector<LaurentPoly> factors);

}  // namespace qtwist::exactalg
