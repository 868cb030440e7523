#include <cstdlib>
#include <string>
#include <vector>

#include "qtwist/errors.hpp"
#include "qtwist/volnum/volnum.hpp"

namespace qtwist::volnum {

namespace {

/// eps^v (c0 + c1 eps + O(eps^2))
struct Jet {
  int v = 0;
  Complex c0;
  Complex c1;
};

Jet operator*(const Jet& a, const Jet& b) { return {a.v + b.v, a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0}; }

Jet inverse(const Jet& a) {
  Complex r = Complex(Real(1L, a.c0.prec())) / a.c0;
  return {-a.v, r, -(a.c1 * r * r)};
}

class JetField {
 public:
  JetField(int n, mpfr_prec_t prec) : n_(n), prec_(prec) {
    zeta_.reserve(n);
    for (int j = 0; j < n; ++j) zeta_.push_back(Complex::root_of_unity(j, n, prec));
  }

  mpfr_prec_t prec() const { return prec_; }

  Jet constant(long c) const { return {0, Complex(Real(c, prec_)), Complex(prec_)}; }

  // q^e = zeta^e (1 + e eps)
  Jet q_power(long e) const {
    const Complex& z = zeta_[mod(e)];
    return {0, z, z.mul_si(e)};
  }

  // 1 - q^j
  Jet one_minus(long j) const {
    if (mod(j) == 0) {
      return {1, Complex(Real(-j, prec_)), Complex(Real(-j * j, prec_).div_si(2))};
    }
    const Complex& z = zeta_[mod(j)];
    return {0, Complex(Real(1L, prec_)) - z, -z.mul_si(j)};
  }

 private:
  std::size_t mod(long e) const {
    long r = e % n_;
    return static_cast<std::size_t>(r < 0 ? r + n_ : r);
  }

  int n_;
  mpfr_prec_t prec_;
  std::vector<Complex> zeta_;
};

class JetSum {
 public:
  explicit JetSum(mpfr_prec_t prec) : value_(prec), pole_(prec), scale_(prec) {}

  void add(const Jet& t) {
    if (t.v >= 1) return;
    if (t.v <= -2) throw NumericalError("summand has a pole of order " + std::to_string(-t.v));
    if (t.v == 0) {
      value_ += t.c0;
      scale_ = max(scale_, abs(t.c0));
    } else {
      value_ += t.c1;
      pole_ += t.c0;
      scale_ = max(scale_, max(abs(t.c1), abs(t.c0)));
    }
  }

  const Complex& value() const { return value_; }
  const Complex& pole() const { return pole_; }
  const Real& scale() const { return scale_; }

 private:
  Complex value_;
  Complex pole_;
  Real scale_;
};

JetSum twist_sum(int p, int n, mpfr_prec_t wp) {
  JetField f(n, wp);
  std::vector<Jet> poch{f.constant(1)};
  for (int j = 1; j <= 2 * n; ++j) poch.push_back(poch.back() * f.one_minus(j));
  std::vector<Jet> inv_poch;
  inv_poch.reserve(poch.size());
  for (const auto& j : poch) inv_poch.push_back(inverse(j));

  std::vector<Jet> b;
  for (int l = 0; l < n; ++l) {
    long e = static_cast<long>(l) * (l + 1) * p + static_cast<long>(l) * (l - 1) / 2;
    b.push_back(f.constant(l % 2 == 0 ? 1 : -1) * f.q_power(e) * f.one_minus(2 * l + 1));
  }

  JetSum sum(wp);
  Jet poch_inv = f.constant(1);  // (q^-1)_k
  for (int k = 0; k < n; ++k) {
    if (k > 0) poch_inv = poch_inv * f.one_minus(-k);
    Jet a = f.constant(k % 2 == 0 ? 1 : -1) * f.q_power(static_cast<long>(k) * (k + 3) / 2) * poch[k] * poch[k] *
            poch_inv;
    for (int l = 0; l <= k; ++l) sum.add(a * b[l] * inv_poch[k + l + 1] * inv_poch[k - l]);
  }
  return sum;
}

JetSum multisum(const jones::KnotId& knot, int n, mpfr_prec_t wp) {
  JetField f(n, wp);
  JetSum sum(wp);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l <= k; ++l) {
      exactalg::QProduct t = jones::summand_term(knot, n, k, l, Var::q);
      if (t.is_zero()) continue;
      Jet j = f.constant(t.sign()) * f.q_power(t.prefactor().exponent(Var::q));
      for (const auto& [idx, e] : t.factors()) {
        Jet base = e > 0 ? f.one_minus(idx) : inverse(f.one_minus(idx));
        for (int r = 0; r < std::abs(e); ++r) j = j * base;
      }
      sum.add(j);
    }
  }
  return sum;
}

}  // namespace

Complex jhat(const jones::KnotId& knot, int n, mpfr_prec_t prec) {
  if (n < 2) throw DomainError("jhat needs n >= 2");
  mpfr_prec_t wp = prec + 32;
  for (int round = 0; round < 6; ++round) {
    const auto* tk = std::get_if<jones::TwistKnot>(&knot);
    JetSum s = tk ? twist_sum(tk->p, n, wp) : multisum(knot, n, wp);
    const Real tol = s.scale() * Real::pow2(-static_cast<long>(wp) + 24, wp);
    if (abs(s.pole()) > tol) {
      throw NumericalError("poles do not cancel in jhat(" + jones::knot_name(knot) + ", " + std::to_string(n) +
                           "): residue " + abs(s.pole()).to_string(6));
    }
    if (s.scale().is_zero()) return Complex(prec);
    const Real mag = abs(s.value());
    if (mag.is_zero()) {
      if (round > 0) return Complex(prec);
      wp *= 2;
      continue;
    }
    const long lost = std::max(0L, s.scale().exponent() - mag.exponent());
    if (static_cast<long>(wp) - lost >= static_cast<long>(prec) + 16) return s.value().with_prec(prec);
    wp = prec + 32 + lost;
  }
  throw NumericalError("jhat(" + jones::knot_name(knot) + ", " + std::to_string(n) +
                       ") lost too much precision to cancellation");
}

std::vector<KashaevEntry> kashaev_scan(int p, int n_min, int n_max, mpfr_prec_t prec) {
  if (p == 0 || p == 1) throw DomainError("kashaev_scan needs a hyperbolic twist knot (p != 0, 1)");
  if (n_min < 3 || n_max < n_min) throw DomainError("kashaev_scan needs 3 <= n_min <= n_max");
  std::vector<KashaevEntry> out;
  const Real two_pi = Real::pi(prec).mul_si(2);
  for (int n = n_min; n <= n_max; ++n) {
    Complex j = jhat(jones::TwistKnot{p}, n, prec);
    Real a = abs(j);
    if (a.is_zero()) {
      out.push_back({n, std::nullopt});
    } else {
      out.push_back({n, (two_pi * log(a)).div_si(n)});
    }
  }
  return out;
}

}  // namespace qtwist::volnum
