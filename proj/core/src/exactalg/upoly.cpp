#include "qtwist/exactalg/upoly.hpp"

#include <algorithm>
#include <utility>

#include "qtwist/errors.hpp"

namespace qtwist::exactalg {

UPoly::UPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::from_laurent(const LaurentPoly& p, Var v) {
  std::vector<mpz_class> c;
  for (const auto& t : p.terms()) {
    for (Var w : kAllVars) {
      if (w != v && t.mono.exponent(w) != 0) {
        throw DomainError("polynomial is not univariate in " + std::string(var_name(v)));
      }
    }
    int e = t.mono.exponent(v);
    if (e < 0) throw DomainError("negative exponent in a univariate polynomial");
    if (static_cast<int>(c.size()) <= e) c.resize(e + 1);
    c[e] += t.coeff;
  }
  return UPoly(std::move(c));
}

LaurentPoly UPoly::to_laurent(Var v) const {
  std::vector<Term> ts;
  for (int i = 0; i <= degree(); ++i) {
    if (c_[i] != 0) ts.push_back({Monomial::of(v, i), c_[i]});
  }
  return LaurentPoly::from_terms(std::move(ts));
}

mpz_class UPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UPoly UPoly::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (lead() < 0) g = -g;
  UPoly r = *this;
  for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

UPoly UPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<mpz_class> d(degree());
  for (int i = 1; i <= degree(); ++i) d[i - 1] = c_[i] * i;
  return UPoly(std::move(d));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[static_cast<int>(i)] + b[static_cast<int>(i)];
  return UPoly(std::move(c));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(c[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return UPoly(std::move(c));
}

UPoly UPoly::pseudo_remainder(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by zero");
  std::vector<mpz_class> r = a.c_;
  const int db = b.degree();
  const mpz_class& lb = b.lead();
  int dr = a.degree();
  int steps = std::max(0, a.degree() - db + 1);
  while (dr >= db && dr >= 0) {
    mpz_class lr = r[dr];
    for (auto& c : r) c *= lb;
    for (int i = 0; i <= db; ++i) r[dr - db + i] -= lr * b.c_[i];
    --steps;
    r.resize(dr);
    while (!r.empty() && r.back() == 0) r.pop_back();
    dr = static_cast<int>(r.size()) - 1;
  }
  UPoly out(std::move(r));
  for (; steps > 0; --steps) {
    for (auto& c : out.c_) c *= lb;
  }
  return out;
}

UPoly UPoly::exact_quotient(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.degree() < b.degree()) {
    if (a.is_zero()) return {};
    throw InexactDivision("univariate division leaves a remainder");
  }
  std::vector<mpz_class> r = a.c_;
  std::vector<mpz_class> q(a.degree() - b.degree() + 1);
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.lead().get_mpz_t())) {
      throw InexactDivision("univariate division leaves a remainder");
    }
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), r[i].get_mpz_t(), b.lead().get_mpz_t());
    for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b.c_[j];
    q[i - db] = std::move(t);
  }
  for (int i = 0; i < db; ++i) {
    if (r[i] != 0) throw InexactDivision("univariate division leaves a remainder");
  }
  return UPoly(std::move(q));
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  UPoly u = a.primitive_part();
  UPoly v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    UPoly r = pseudo_remainder(u, v).primitive_part();
    u = std::move(v);
    v = std::move(r);
  }
  u = u.primitive_part();
  for (auto& c : u.c_) c *= g;
  return u;
}

UPoly UPoly::squarefree_part() const {
  if (degree() < 1) return primitive_part();
  UPoly p = primitive_part();
  UPoly g = gcd(p, p.derivative()).primitive_part();
  return exact_quotient(p, g).primitive_part();
}

std::string UPoly::to_string(char var) const {
  std::string s = to_laurent(Var::x).to_string();
  std::replace(s.begin(), s.end(), 'x', var);
  return s;
}

}  // namespace qtwist::exactalg
