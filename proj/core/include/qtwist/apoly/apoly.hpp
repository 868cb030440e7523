#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qtwist/exactalg/rat_func.hpp"

namespace qtwist::apoly {

using exactalg::LaurentPoly;
using exactalg::Monomial;
using exactalg::RatFunc;
using exactalg::Term;
using exactalg::Var;

/// A polynomial in (l, m).
struct APoly {
  LaurentPoly poly;
  friend bool operator==(const APoly&, const APoly&) = default;
};

/// h_p as a Laurent polynomial in (m, x); m-exponents may be negative.
struct HPoly {
  LaurentPoly poly;
  friend bool operator==(const HPoly&, const HPoly&) = default;
};

/// c = -l + l^2 + 2lm^2 + m^4 + 2lm^4 + l^2m^4 + 2lm^6 + m^8 - lm^8 and
/// d = m^4 (l + m^2)^4.
std::pair<LaurentPoly, LaurentPoly> cd_coefficients();

/// a = m^4 - xm^4 + x^2m^2 + m^2 + 1 - x.
LaurentPoly a_coefficient();
/// b = m^4 - xm^2 + 1.
LaurentPoly b_coefficient();

/// The four initial polynomials for p in {-1, 0, 1, 2}.
LaurentPoly initial_a_polynomial(int p);

/// A_{K_p}: the initial polynomial for p in {-1, 0, 1, 2}, otherwise
/// c A_{p-1} - d A_{p-2} (p > 2) or c A_{p+1} - d A_{p+2} (p < -1).
APoly a_polynomial(int p);

/// x = (lm^2 + 1)/(m^2 + l).
RatFunc solve_meridian_x();

/// h_0 = 1, h_1 = b/m^2, h_p = (a/m^2) h_{p-1} - h_{p-2}, run backward for p < 0.
HPoly h_polynomial(int p);

/// Degree-one representative alpha*y + beta modulo y^2 = (a/m^2) y - 1.
class QuadQuotient {
 public:
  QuadQuotient() = default;
  QuadQuotient(RatFunc alpha, RatFunc beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {}

  static QuadQuotient y();
  /// (a/m^2) - y, the inverse of y.
  static QuadQuotient y_inverse();
  /// Reduces a polynomial in y (coefficients in m, x) to its representative.
  static QuadQuotient reduce(const LaurentPoly& f);
  /// The class of y^e for any integer e.
  static QuadQuotient y_power(int e);

  const RatFunc& alpha() const { return alpha_; }
  const RatFunc& beta() const { return beta_; }

  friend QuadQuotient operator+(const QuadQuotient& u, const QuadQuotient& v);
  friend QuadQuotient operator-(const QuadQuotient& u, const QuadQuotient& v);
  friend QuadQuotient operator*(const QuadQuotient& u, const QuadQuotient& v);
  friend QuadQuotient operator*(const RatFunc& c, const QuadQuotient& v);
  friend bool operator==(const QuadQuotient& u, const QuadQuotient& v) {
    return u.alpha_ == v.alpha_ && u.beta_ == v.beta_;
  }

 private:
  RatFunc alpha_;
  RatFunc beta_;
};

/// Rebuilds h_p from the factored fixed-point equation in the quotient ring
/// and checks it against h_polynomial(p).  For p > 0 the cofactor of
/// (y+1)(1-x) in y^(2p+1) + 1 - y^(2p) x - xy reduces to y^p h_p; for p < 0
/// the equation is first multiplied by y^(-2p) and the cofactor reduces to
/// y^|p| h_p.  Throws CertificationError on mismatch, DomainError for p = 0.
HPoly h_via_reduction(int p);

/// (m^2+l)^e (m^2)^|p| h_p(m, x), with e = 2p-1 (p > 0) or 2|p| (p <= 0).
/// Throws InexactDivision if the clearing factor leaves a denominator.
APoly b_polynomial(int p);

/// (m^2+l)^(2p-1) (m^2)^p h_p(m, x) for p >= 0 as a rational function.
/// Agrees with b_polynomial for p > 0 and gives 1/(m^2+l) at p = 0, which
/// is the value the three-term law for B needs at its first step.
RatFunc b_positive_branch(int p);

struct CoefficientDiff {
  Monomial mono;
  mpz_class expected;  // coefficient in A
  mpz_class actual;    // coefficient in B
};

struct AjReport {
  int p = 0;
  bool equal = false;
  /// Set when B = unit * A for a signed monomial unit; 1 when equal.
  std::optional<Term> unit;
  std::vector<CoefficientDiff> diff;
};

/// Compares b_polynomial(p) against a_polynomial(p).
AjReport verify_aj(int p);

/// Coefficient-by-coefficient difference b - a, listed as (a, b) pairs.
std::vector<CoefficientDiff> coefficient_diff(const LaurentPoly& a, const LaurentPoly& b);

/// Whether A = sum_i l^i P_i(m) satisfies P_i(m) = +-m^D P_(top-i)(1/m)
/// for one sign and one D.
bool is_reciprocal(const LaurentPoly& a);

}  // namespace qtwist::apoly
