#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "qtwist/errors.hpp"
#include "qtwist/exactalg/eval.hpp"
#include "qtwist/volnum/volnum.hpp"

namespace qtwist::volnum {

using exactalg::eval_complex;

namespace {

std::vector<UPoly> coefficients_in(const LaurentPoly& f, Var eliminate, Var keep) {
  if (f.is_zero()) return {};
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < exactalg::kVarCount; ++i) {
      const Var v = static_cast<Var>(i);
      const int e = t.mono.exponent(v);
      if (e < 0 || (e != 0 && v != eliminate && v != keep)) {
        throw DomainError("resultant needs a polynomial in " + std::string(exactalg::var_name(eliminate)) + " and " +
                          std::string(exactalg::var_name(keep)));
      }
    }
  }
  std::vector<UPoly> out;
  for (int i = 0; i <= f.max_degree(eliminate); ++i) {
    out.push_back(UPoly::from_laurent(f.coefficient(eliminate, i), keep));
  }
  return out;
}

Complex horner(const std::vector<Complex>& a, const Complex& z) {
  Complex r = a.back();
  for (std::size_t i = a.size() - 1; i-- > 0;) r = r * z + a[i];
  return r;
}

}  // namespace

UPoly resultant(const LaurentPoly& f, const LaurentPoly& g, Var eliminate, Var keep) {
  const auto fc = coefficients_in(f, eliminate, keep);
  const auto gc = coefficients_in(g, eliminate, keep);
  if (fc.empty() || gc.empty()) return {};
  const int m = static_cast<int>(fc.size()) - 1;
  const int n = static_cast<int>(gc.size()) - 1;
  const int size = m + n;
  if (size == 0) return UPoly(std::vector<mpz_class>{1});

  std::vector<std::vector<UPoly>> s(size, std::vector<UPoly>(size));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= m; ++j) s[i][i + j] = fc[m - j];
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = gc[n - j];
  }

  // Fraction-free Bareiss elimination
  UPoly prev(std::vector<mpz_class>{1});
  bool negate = false;
  for (int k = 0; k + 1 < size; ++k) {
    if (s[k][k].is_zero()) {
      int r = k + 1;
      while (r < size && s[r][k].is_zero()) ++r;
      if (r == size) return {};
      std::swap(s[k], s[r]);
      negate = !negate;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        s[i][j] = UPoly::exact_quotient(s[i][j] * s[k][k] - s[i][k] * s[k][j], prev);
      }
      s[i][k] = UPoly();
    }
    prev = s[k][k];
  }
  return negate ? -s[size - 1][size - 1] : s[size - 1][size - 1];
}

RootSet polynomial_roots(const UPoly& f, mpfr_prec_t prec) {
  RootSet out;
  const int d = f.degree();
  if (d <= 0) return out;
  const mpfr_prec_t wp = prec + 32;

  std::vector<Complex> a;
  for (int i = 0; i <= d; ++i) a.emplace_back(Real(f[i], wp));
  std::vector<Complex> da;
  for (int i = 1; i <= d; ++i) da.push_back(a[i].mul_si(i));
  const Real lead = abs(a[d]);

  // Fujiwara-style radius max |a_k / a_d|^(1/(d-k))
  Real radius(0.0, wp);
  for (int k = 0; k < d; ++k) {
    if (a[k].is_zero()) continue;
    Real r = exp(log(abs(a[k]) / lead).div_si(d - k));
    radius = max(radius, r);
  }
  if (radius.is_zero()) radius = Real(1L, wp);

  std::vector<Complex> z;
  const Real two_pi = Real::pi(wp).mul_si(2);
  for (int k = 0; k < d; ++k) {
    Real theta = two_pi.mul_si(k).div_si(d) + Real(0.4, wp);
    z.push_back(Complex::polar(radius, theta));
  }

  const Real stop = Real::pow2(-static_cast<long>(wp) + 12, wp);
  const Real one(1L, wp);
  bool converged = false;
  for (int iter = 0; iter < 2000 && !converged; ++iter) {
    Real worst(0.0, wp);
    for (int k = 0; k < d; ++k) {
      Complex pk = horner(a, z[k]);
      if (pk.is_zero()) continue;
      Complex w = pk / horner(da, z[k]);
      Complex s(wp);
      for (int j = 0; j < d; ++j) {
        if (j != k) s += Complex(one) / (z[k] - z[j]);
      }
      Complex corr = w / (Complex(one) - w * s);
      z[k] -= corr;
      worst = max(worst, abs(corr) / max(one, abs(z[k])));
    }
    converged = worst < stop;
  }

  std::vector<Real> residuals;
  for (int k = 0; k < d; ++k) {
    Real prod = lead;
    for (int j = 0; j < d; ++j) {
      if (j != k) prod *= abs(z[k] - z[j]);
    }
    residuals.push_back(abs(horner(a, z[k])));
    // Horner rounding bound on |p(z)|
    Real absz = abs(z[k]);
    Real bound(0.0, wp);
    for (int i = d; i >= 0; --i) bound = bound * absz + abs(a[i]);
    bound = bound.mul_si(2 * d + 2) * Real::pow2(-static_cast<long>(wp), wp);
    out.radii.push_back(prod.is_zero() ? Real(-1L, wp) : ((residuals.back() + bound).mul_si(d) / prod));
  }
  bool separated = converged;
  for (int i = 0; i < d && separated; ++i) {
    if (out.radii[i].sign() < 0) separated = false;
    for (int j = i + 1; j < d && separated; ++j) {
      if (abs(z[i] - z[j]) <= out.radii[i] + out.radii[j]) separated = false;
    }
  }
  if (!separated) {
    std::string msg = "could not certify the roots of a degree " + std::to_string(d) + " polynomial; residuals:";
    for (const auto& r : residuals) msg += " " + r.to_string(6);
    throw NumericalError(msg);
  }
  out.roots = std::move(z);
  return out;
}

std::pair<LaurentPoly, LaurentPoly> saddle_equations(int p) {
  const LaurentPoly x = LaurentPoly::variable(Var::x);
  const LaurentPoly y = LaurentPoly::variable(Var::y);
  const LaurentPoly one(1);
  LaurentPoly e1 = (one - x).pow(3) * y - (one - x * y) * (y - x);
  LaurentPoly e2;
  if (p >= 0) {
    e2 = x * (y.pow(2 * p) + y) - (y.pow(2 * p + 1) + 1);
  } else {
    const int q = -p;
    e2 = x * (one + y.pow(2 * q + 1)) - (y + y.pow(2 * q));
  }
  return {e1, e2};
}

Real volume_candidate(const Complex& x, const Complex& y, mpfr_prec_t prec) {
  const mpfr_prec_t wp = prec + 16;
  Real v = bloch_wigner(x, wp).mul_si(3) - bloch_wigner(x * y, wp) - bloch_wigner(x / y, wp);
  return v.with_prec(prec);
}

SaddleReport saddle_solve(int p, mpfr_prec_t prec) {
  if (p == 0) throw DomainError("saddle_solve needs p != 0");
  const mpfr_prec_t wp = prec + 32;
  const auto [e1, e2] = saddle_equations(p);
  const UPoly eliminant = resultant(e1, e2, Var::x, Var::y).squarefree_part();

  SaddleReport report;
  report.p = p;
  report.eliminant_degree = eliminant.degree();
  const RootSet roots = polynomial_roots(eliminant, wp);

  const LaurentPoly num = -e2.coefficient(Var::x, 0);
  const LaurentPoly den = e2.coefficient(Var::x, 1);
  const Real tol = Real::pow2(-static_cast<long>(prec) / 2, wp);
  const Complex one(Real(1L, wp));
  for (const Complex& y : roots.roots) {
    auto near = [&](const Complex& a, const Complex& b) { return abs(a - b) <= tol; };
    const Complex zero(wp);
    if (near(y, zero)) {
      ++report.discarded;
      continue;
    }
    const Complex dy = eval_complex(den, {{Var::y, y}}, wp);
    if (near(dy, zero)) {
      ++report.discarded;
      continue;
    }
    const Complex x = eval_complex(num, {{Var::y, y}}, wp) / dy;
    if (near(x, zero) || near(x, one) || near(x * y, one) || near(y, x)) {
      ++report.discarded;
      continue;
    }
    SaddleSolution s{x, y, Real(wp), abs(eval_complex(e1, {{Var::x, x}, {Var::y, y}}, wp)),
                     abs(eval_complex(e2, {{Var::x, x}, {Var::y, y}}, wp))};
    if (s.residual1 > tol || s.residual2 > tol) {
      throw NumericalError("saddle solution residuals " + s.residual1.to_string(6) + ", " +
                           s.residual2.to_string(6) + " exceed 2^(-prec/2)");
    }
    s.volume_candidate = volume_candidate(x, y, wp);
    report.solutions.push_back(std::move(s));
  }
  return report;
}

VolumeResult optimistic_volume(int p, mpfr_prec_t prec) {
  SaddleReport report = saddle_solve(p, prec);
  if (report.solutions.empty()) throw NumericalError("no saddle solutions for p = " + std::to_string(p));
  std::size_t best = 0;
  for (std::size_t i = 1; i < report.solutions.size(); ++i) {
    if (report.solutions[i].volume_candidate > report.solutions[best].volume_candidate) best = i;
  }
  Real v = report.solutions[best].volume_candidate.with_prec(prec);
  return {std::move(v), best, std::move(report)};
}

}  // namespace qtwist::volnum
