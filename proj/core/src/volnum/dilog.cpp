#include <mutex>
#include <string>
#include <vector>

#include "qtwist/errors.hpp"
#include "qtwist/volnum/volnum.hpp"

namespace qtwist::volnum {

namespace {

Real from_rational(const mpq_class& r, mpfr_prec_t prec) {
  return Real(r.get_num(), prec) / Real(r.get_den(), prec);
}

long term_budget(mpfr_prec_t prec) { return 4 * static_cast<long>(prec) + 100; }

// sum z^k / k^2 for |z| <= 1/2
Complex dilog_series(const Complex& z, mpfr_prec_t prec) {
  const Real eps = Real::pow2(-static_cast<long>(prec) - 2, prec);
  Complex sum(prec);
  Complex power = z;
  for (long k = 1; k <= term_budget(prec); ++k) {
    sum += power.div_si(k * k);
    power *= z;
    if (abs(power) < eps) return sum;
  }
  throw NumericalError("dilog power series did not converge at z = " + z.to_string());
}

// sum_k B_k u^(k+1) / (k+1)!, u = -log(1 - z)
Complex dilog_bernoulli(const Complex& z, mpfr_prec_t prec) {
  const Real eps = Real::pow2(-static_cast<long>(prec) - 4, prec);
  const Complex one(Real(1L, prec));
  const Complex u = -log(one - z);
  Complex sum(prec);
  Complex f = u;  // u^(k+1)/(k+1)!
  for (long k = 0; k <= term_budget(prec); ++k) {
    mpq_class b = bernoulli(static_cast<int>(k));
    if (b != 0) {
      Complex term = f * from_rational(b, prec);
      sum += term;
      if (k > 2 && abs(term) < eps) return sum;
    }
    f = f * u;
    f = f.div_si(k + 2);
  }
  throw NumericalError("dilog Bernoulli series did not converge at z = " + z.to_string());
}

}  // namespace

mpq_class bernoulli(int k) {
  static std::mutex mu;
  static std::vector<mpq_class> table{mpq_class(1)};
  std::lock_guard lock(mu);
  while (static_cast<int>(table.size()) <= k) {
    const int m = static_cast<int>(table.size());
    mpz_class binom = 1;  // C(m+1, j)
    mpq_class acc = 0;
    for (int j = 0; j < m; ++j) {
      acc += binom * table[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    mpq_class b = -acc / (m + 1);
    b.canonicalize();
    table.push_back(b);
  }
  return table[k];
}

Complex dilog(const Complex& z_in, mpfr_prec_t prec) {
  const mpfr_prec_t wp = prec + 16;
  const Complex z = z_in.with_prec(wp);
  const Real one(1L, wp);
  const Complex c1(one);
  const Real pi2_6 = Real::pi(wp) * Real::pi(wp) / Real(6L, wp);
  if (z.is_zero()) return Complex(prec);

  const Real quarter = Real::pow2(-2, wp);
  Complex result(wp);
  if (norm(z) > one) {
    // Li2(z) = -Li2(1/z) - pi^2/6 - log(-z)^2 / 2
    Complex l = log(-z);
    result = -dilog(c1 / z, wp) - Complex(pi2_6) - (l * l).div_si(2);
  } else if (norm(z) <= quarter) {
    result = dilog_series(z, wp);
  } else if (norm(c1 - z) <= quarter) {
    if ((c1 - z).is_zero()) return Complex(pi2_6).with_prec(prec);
    result = Complex(pi2_6) - log(z) * log(c1 - z) - dilog_series(c1 - z, wp);
  } else {
    result = dilog_bernoulli(z, wp);
  }
  return result.with_prec(prec);
}

Real bloch_wigner(const Complex& z_in, mpfr_prec_t prec) {
  const mpfr_prec_t wp = prec + 16;
  const Complex z = z_in.with_prec(wp);
  const Complex c1(Real(1L, wp));
  if (z.is_zero() || (c1 - z).is_zero()) throw DomainError("D(z) is undefined at z = 0 and z = 1");
  Real d = dilog(z, wp).im() + log(abs(z)) * arg(c1 - z);
  return d.with_prec(prec);
}

}  // namespace qtwist::volnum
