#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qtwist/exactalg/rat_func.hpp"

namespace qtwist::exactalg {

/// (q)_n = (1-q)(1-q^2)...(1-q^n), written in `carrier` (q, or s with q = s^2).
/// Throws DomainError for n < 0; callers handle the 1/(q)_{negative} = 0 rule.
LaurentPoly qpoch(int n, Var carrier = Var::q);

/// (q^-1)_n = (1-q^-1)(1-q^-2)...(1-q^-n).
LaurentPoly qinv_poch(int n, Var carrier = Var::q);

/// (A;q)_k = (1-A)(1-Aq)...(1-Aq^(k-1)).
LaurentPoly shifted_qpoch(const LaurentPoly& a, int k, Var carrier = Var::q);

/// {n} = s^n - s^-n.
LaurentPoly brace(int n);

/// {n}! = {n}{n-1}...{1}, with {0}! = 1.  Throws DomainError for n < 0.
LaurentPoly brace_factorial(int n);

/// The d-th cyclotomic polynomial in q (expressed in `carrier`).
LaurentPoly cyclotomic(int d, Var carrier = Var::q);

/// True when 1/(q)_n is zero under the q-series convention, i.e. n < 0.
constexpr bool reciprocal_vanishes(int n) { return n < 0; }

/// A signed monomial times a product of powers of (1 - q^j), j > 0.
///
/// Every q-hypergeometric term in the pipeline has this shape.  Products and
/// quotients stay exact without expanding anything; sums are formed over a
/// common denominator of cyclotomic polynomials (see `QSum`).
class QProduct {
 public:
  QProduct() = default;
  explicit QProduct(Monomial prefactor, int sign = 1) : sign_(sign), prefactor_(prefactor) {}

  static QProduct zero() {
    QProduct z;
    z.sign_ = 0;
    return z;
  }

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }
  const Monomial& prefactor() const { return prefactor_; }
  /// Exponent of (1 - q^j) for each j > 0; negative means denominator.
  const std::map<int, int>& factors() const { return factors_; }

  /// Multiplies by (1 - q^j)^e for any nonzero j (negative j is normalized
  /// through 1 - q^-j = -q^-j (1 - q^j)).  j = 0 in a numerator gives zero;
  /// in a denominator it throws DomainError.
  QProduct& mul_factor(int j, int e, Var carrier);

  QProduct& mul_poch(int n, int e, Var carrier);      // (q)_n^e
  QProduct& mul_inv_poch(int n, int e, Var carrier);  // (q^-1)_n^e
  QProduct& mul_monomial(const Monomial& m, int sign = 1);

  /// 1/(q)_n with the vanishing convention for n < 0.
  QProduct& div_poch(int n, Var carrier) {
    if (reciprocal_vanishes(n)) return *this = zero();
    return mul_poch(n, -1, carrier);
  }
  QProduct& div_inv_poch(int n, Var carrier) {
    if (reciprocal_vanishes(n)) return *this = zero();
    return mul_inv_poch(n, -1, carrier);
  }

  friend QProduct operator*(QProduct a, const QProduct& b);
  friend QProduct operator/(QProduct a, const QProduct& b);

  bool has_denominator() const;

  /// Expands to a Laurent polynomial, or throws InexactDivision.
  LaurentPoly to_poly(Var carrier) const;

 private:
  int sign_ = 1;
  Monomial prefactor_;
  std::map<int, int> factors_;
};

/// Exact sum of polynomial multiples of QProducts.
///
/// The terms are brought over the common denominator prod_d Phi_d^(E_d) of
/// cyclotomic polynomials, so the numerator is a single Laurent polynomial.
class QSum {
 public:
  explicit QSum(Var carrier) : carrier_(carrier) {}

  void add(const QProduct& t, const LaurentPoly& multiplier = 1);

  /// Numerator over the common denominator; zero iff the sum is zero.
  LaurentPoly numerator() const;
  /// The common denominator as cyclotomic exponents {d: E_d}.
  std::map<int, int> denominator() const;

  bool is_zero() const { return numerator().is_zero(); }

  /// The sum as a Laurent polynomial; throws InexactDivision if the
  /// denominators do not cancel.
  LaurentPoly to_poly() const;

  /// The sum as numerator over the expanded common denominator.
  RatFunc to_ratfunc() const;

  std::size_t size() const { return terms_.size(); }

 private:
  struct Entry {
    int sign;
    Monomial prefactor;
    std::map<int, int> cyclo;  // d -> exponent of Phi_d
    LaurentPoly multiplier;
  };

  Var carrier_;
  std::vector<Entry> terms_;
};

}  // namespace qtwist::exactalg
