#include "qtwist/apoly/apoly.hpp"

#include <cstdlib>
#include <map>
#include <string>

#include "qtwist/errors.hpp"
#include "qtwist/exactalg/poly_io.hpp"

namespace qtwist::apoly {

using exactalg::exact_divide;
using exactalg::parse_poly;
using exactalg::unit_ratio;

namespace {

LaurentPoly l() { return LaurentPoly::variable(Var::l); }
LaurentPoly m(int e = 1) { return LaurentPoly::variable(Var::m, e); }
LaurentPoly x() { return LaurentPoly::variable(Var::x); }
LaurentPoly y(int e = 1) { return LaurentPoly::variable(Var::y, e); }

// a / m^2
LaurentPoly a_over_m2() { return a_coefficient().times(Monomial::of(Var::m, -2)); }

}  // namespace

std::pair<LaurentPoly, LaurentPoly> cd_coefficients() {
  LaurentPoly c = parse_poly("-l + l^2 + 2*l*m^2 + m^4 + 2*l*m^4 + l^2*m^4 + 2*l*m^6 + m^8 - l*m^8");
  LaurentPoly d = m(4) * (l() + m(2)).pow(4);
  return {c, d};
}

LaurentPoly a_coefficient() { return parse_poly("m^4 - x*m^4 + x^2*m^2 + m^2 + 1 - x"); }

LaurentPoly b_coefficient() { return parse_poly("m^4 - x*m^2 + 1"); }

LaurentPoly initial_a_polynomial(int p) {
  switch (p) {
    case 2:
      return parse_poly(
          "-l^2 + l^3 + 2*l^2*m^2 + l*m^4 + 2*l^2*m^4 - l*m^6 - l^2*m^8"
          " + 2*l*m^10 + l^2*m^10 + 2*l*m^12 + m^14 - l*m^14");
    case 1: return parse_poly("l + m^6");
    case 0: return 1;
    case -1: return parse_poly("-l + l*m^2 + m^4 + 2*l*m^4 + l^2*m^4 + l*m^6 - l*m^8");
    default: throw DomainError("no initial A-polynomial for p = " + std::to_string(p));
  }
}

APoly a_polynomial(int p) {
  if (p >= -1 && p <= 2) return {initial_a_polynomial(p)};
  const auto [c, d] = cd_coefficients();
  const int step = p > 0 ? 1 : -1;
  LaurentPoly older = initial_a_polynomial(p > 0 ? 1 : 0);
  LaurentPoly newer = initial_a_polynomial(p > 0 ? 2 : -1);
  for (int i = p > 0 ? 3 : -2; i != p + step; i += step) {
    LaurentPoly next = c * newer - d * older;
    older = std::move(newer);
    newer = std::move(next);
  }
  return {newer};
}

RatFunc solve_meridian_x() { return RatFunc(l() * m(2) + 1, m(2) + l()); }

HPoly h_polynomial(int p) {
  const LaurentPoly am2 = a_over_m2();
  LaurentPoly h0 = 1;
  if (p == 0) return {h0};
  if (p > 0) {
    LaurentPoly prev = h0;
    LaurentPoly cur = b_coefficient().times(Monomial::of(Var::m, -2));
    for (int i = 2; i <= p; ++i) {
      LaurentPoly next = am2 * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return {cur};
  }
  LaurentPoly later = b_coefficient().times(Monomial::of(Var::m, -2));  // h_(i+2)
  LaurentPoly cur = h0;                                                  // h_(i+1)
  for (int i = -1; i >= p; --i) {
    LaurentPoly next = am2 * cur - later;
    later = std::move(cur);
    cur = std::move(next);
  }
  return {cur};
}

QuadQuotient QuadQuotient::y() { return {RatFunc(1), RatFunc(0)}; }

QuadQuotient QuadQuotient::y_inverse() { return {RatFunc(-1), RatFunc(a_over_m2())}; }

QuadQuotient QuadQuotient::y_power(int e) {
  QuadQuotient base = e >= 0 ? y() : y_inverse();
  QuadQuotient r{RatFunc(0), RatFunc(1)};
  for (int i = 0; i < std::abs(e); ++i) r = r * base;
  return r;
}

QuadQuotient QuadQuotient::reduce(const LaurentPoly& f) {
  QuadQuotient r;
  if (f.is_zero()) return r;
  for (int j = f.min_degree(Var::y); j <= f.max_degree(Var::y); ++j) {
    LaurentPoly cj = f.coefficient(Var::y, j);
    if (!cj.is_zero()) r = r + RatFunc(cj) * y_power(j);
  }
  return r;
}

QuadQuotient operator+(const QuadQuotient& u, const QuadQuotient& v) {
  return {u.alpha_ + v.alpha_, u.beta_ + v.beta_};
}

QuadQuotient operator-(const QuadQuotient& u, const QuadQuotient& v) {
  return {u.alpha_ - v.alpha_, u.beta_ - v.beta_};
}

QuadQuotient operator*(const QuadQuotient& u, const QuadQuotient& v) {
  // y^2 = (a/m^2) y - 1
  RatFunc top = u.alpha_ * v.alpha_;
  return {top * RatFunc(a_over_m2()) + u.alpha_ * v.beta_ + u.beta_ * v.alpha_, u.beta_ * v.beta_ - top};
}

QuadQuotient operator*(const RatFunc& c, const QuadQuotient& v) { return {c * v.alpha_, c * v.beta_}; }

HPoly h_via_reduction(int p) {
  if (p == 0) throw DomainError("h_via_reduction needs p != 0");
  LaurentPoly eq;
  if (p > 0) {
    eq = y(2 * p + 1) + 1 - x() * y(2 * p) - x() * y();
  } else {
    eq = y() + y(-2 * p) - x() - x() * y(-2 * p + 1);
  }
  LaurentPoly cofactor = exact_divide(eq, y() + 1);
  QuadQuotient reduced = QuadQuotient::reduce(cofactor);
  const RatFunc one_minus_x(1 - x());
  QuadQuotient h_class{reduced.alpha() / one_minus_x, reduced.beta() / one_minus_x};

  const QuadQuotient yp = QuadQuotient::y_power(std::abs(p));
  const HPoly h = h_polynomial(p);
  if (!(h_class == RatFunc(h.poly) * yp)) {
    throw CertificationError("quotient reduction disagrees with h_" + std::to_string(p));
  }
  RatFunc extracted = yp.alpha().is_zero() ? h_class.beta() / yp.beta() : h_class.alpha() / yp.alpha();
  return {extracted.to_poly()};
}

APoly b_polynomial(int p) {
  const HPoly h = h_polynomial(p);
  RatFunc hx = exactalg::substitute(h.poly, {{Var::x, solve_meridian_x()}});
  const int clear = p > 0 ? 2 * p - 1 : -2 * p;
  RatFunc scaled = hx * RatFunc((m(2) + l()).pow(clear) * m(2 * std::abs(p)));
  LaurentPoly b = scaled.to_poly();
  if (!b.is_zero() && (b.min_degree(Var::l) < 0 || b.min_degree(Var::m) < 0)) {
    throw InexactDivision("B_" + std::to_string(p) + " has negative exponents");
  }
  return {b};
}

RatFunc b_positive_branch(int p) {
  if (p < 0) throw DomainError("b_positive_branch needs p >= 0");
  RatFunc hx = exactalg::substitute(h_polynomial(p).poly, {{Var::x, solve_meridian_x()}});
  return hx * RatFunc(m(2 * p)) * RatFunc(m(2) + l()).pow(2 * p - 1);
}

std::vector<CoefficientDiff> coefficient_diff(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<Monomial, std::pair<mpz_class, mpz_class>> table;
  for (const auto& t : a.terms()) table[t.mono].first = t.coeff;
  for (const auto& t : b.terms()) table[t.mono].second = t.coeff;
  std::vector<CoefficientDiff> out;
  for (const auto& [mono, ab] : table) {
    if (ab.first != ab.second) out.push_back({mono, ab.first, ab.second});
  }
  return out;
}

AjReport verify_aj(int p) {
  AjReport r;
  r.p = p;
  const LaurentPoly a = a_polynomial(p).poly;
  const LaurentPoly b = b_polynomial(p).poly;
  r.equal = a == b;
  if (r.equal) {
    r.unit = Term{Monomial{}, 1};
    return r;
  }
  r.unit = unit_ratio(b, a);
  if (!r.unit) r.diff = coefficient_diff(a, b);
  return r;
}

bool is_reciprocal(const LaurentPoly& a) {
  if (a.is_zero()) return true;
  const int lo = a.min_degree(Var::l);
  const int hi = a.max_degree(Var::l);
  auto mirror = [](const LaurentPoly& f) {
    return f.map_monomials([](const Monomial& mono) {
      Monomial r = mono;
      r.set(Var::m, -mono.exponent(Var::m));
      return std::pair{r, 1};
    });
  };
  std::optional<Term> unit = unit_ratio(a.coefficient(Var::l, lo), mirror(a.coefficient(Var::l, hi)));
  if (!unit) return false;
  for (int i = lo; i <= hi; ++i) {
    LaurentPoly mirrored = mirror(a.coefficient(Var::l, lo + hi - i)).times(unit->mono, unit->coeff);
    if (a.coefficient(Var::l, i) != mirrored) return false;
  }
  return true;
}

}  // namespace qtwist::apoly
