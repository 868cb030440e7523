#include "qtwist/exactalg/qpoch.hpp"

#include <algorithm>
#include <string>

#include "qtwist/errors.hpp"

namespace qtwist::exactalg {

namespace {

LaurentPoly one_minus_q(int j, Var carrier) {
  return LaurentPoly(1) - LaurentPoly::monomial(q_power(j, carrier));
}

LaurentPoly to_carrier(const LaurentPoly& p_in_q, Var carrier) {
  if (carrier == Var::q) return p_in_q;
  return p_in_q.map_monomials([carrier](const Monomial& m) {
    return std::pair{q_power(m.exponent(Var::q), carrier), 1};
  });
}

std::vector<int> divisors(int j) {
  std::vector<int> out;
  for (int d = 1; d * d <= j; ++d) {
    if (j % d != 0) continue;
    out.push_back(d);
    if (d * d != j) out.push_back(j / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

LaurentPoly qpoch(int n, Var carrier) {
  if (n < 0) throw DomainError("(q)_n is undefined for n = " + std::to_string(n));
  std::vector<LaurentPoly> fs;
  fs.reserve(n);
  for (int i = 1; i <= n; ++i) fs.push_back(one_minus_q(i, carrier));
  return product(std::move(fs));
}

LaurentPoly qinv_poch(int n, Var carrier) {
  if (n < 0) throw DomainError("(q^-1)_n is undefined for n = " + std::to_string(n));
  std::vector<LaurentPoly> fs;
  fs.reserve(n);
  for (int i = 1; i <= n; ++i) fs.push_back(one_minus_q(-i, carrier));
  return product(std::move(fs));
}

LaurentPoly shifted_qpoch(const LaurentPoly& a, int k, Var carrier) {
  if (k < 0) throw DomainError("(A;q)_k is undefined for k = " + std::to_string(k));
  std::vector<LaurentPoly> fs;
  fs.reserve(k);
  for (int i = 0; i < k; ++i) fs.push_back(LaurentPoly(1) - a.times(q_power(i, carrier)));
  return product(std::move(fs));
}

LaurentPoly brace(int n) {
  return LaurentPoly::variable(Var::s, n) - LaurentPoly::variable(Var::s, -n);
}

LaurentPoly brace_factorial(int n) {
  if (n < 0) throw DomainError("{n}! is undefined for n = " + std::to_string(n));
  std::vector<LaurentPoly> fs;
  fs.reserve(n);
  for (int i = 1; i <= n; ++i) fs.push_back(brace(i));
  return product(std::move(fs));
}

LaurentPoly cyclotomic(int d, Var carrier) {
  if (d < 1) throw DomainError("cyclotomic index must be positive");
  LaurentPoly p = LaurentPoly::variable(Var::q, d) - 1;
  for (int e : divisors(d)) {
    if (e != d) p = exact_divide(p, cyclotomic(e, Var::q));
  }
  return to_carrier(p, carrier);
}

QProduct& QProduct::mul_factor(int j, int e, Var carrier) {
  if (is_zero() || e == 0) return *this;
  if (j == 0) {
    if (e > 0) return *this = zero();
    throw DomainError("division by (1 - q^0) = 0");
  }
  if (j < 0) {
    // 1 - q^j = -q^j (1 - q^-j)
    if (e % 2 != 0) sign_ = -sign_;
    prefactor_ *= q_power(j * e, carrier);
    j = -j;
  }
  auto it = factors_.try_emplace(j, 0).first;
  it->second += e;
  if (it->second == 0) factors_.erase(it);
  return *this;
}

QProduct& QProduct::mul_poch(int n, int e, Var carrier) {
  if (n < 0) throw DomainError("(q)_n is undefined for n = " + std::to_string(n));
  for (int i = 1; i <= n; ++i) mul_factor(i, e, carrier);
  return *this;
}

QProduct& QProduct::mul_inv_poch(int n, int e, Var carrier) {
  if (n < 0) throw DomainError("(q^-1)_n is undefined for n = " + std::to_string(n));
  for (int i = 1; i <= n; ++i) mul_factor(-i, e, carrier);
  return *this;
}

QProduct& QProduct::mul_monomial(const Monomial& m, int sign) {
  if (is_zero()) return *this;
  if (sign == 0) return *this = zero();
  prefactor_ *= m;
  if (sign < 0) sign_ = -sign_;
  return *this;
}

QProduct operator*(QProduct a, const QProduct& b) {
  if (a.is_zero() || b.is_zero()) return QProduct::zero();
  a.sign_ *= b.sign_;
  a.prefactor_ *= b.prefactor_;
  for (const auto& [j, e] : b.factors_) {
    auto it = a.factors_.try_emplace(j, 0).first;
    it->second += e;
    if (it->second == 0) a.factors_.erase(it);
  }
  return a;
}

QProduct operator/(QProduct a, const QProduct& b) {
  if (b.is_zero()) throw DomainError("division by a zero q-product");
  if (a.is_zero()) return a;
  a.sign_ *= b.sign_;
  a.prefactor_ = a.prefactor_ / b.prefactor_;
  for (const auto& [j, e] : b.factors_) {
    auto it = a.factors_.try_emplace(j, 0).first;
    it->second -= e;
    if (it->second == 0) a.factors_.erase(it);
  }
  return a;
}

bool QProduct::has_denominator() const {
  return std::any_of(factors_.begin(), factors_.end(), [](const auto& f) { return f.second < 0; });
}

LaurentPoly QProduct::to_poly(Var carrier) const {
  QSum s(carrier);
  s.add(*this);
  return s.to_poly();
}

void QSum::add(const QProduct& t, const LaurentPoly& multiplier) {
  if (t.is_zero() || multiplier.is_zero()) return;
  Entry e{t.sign(), t.prefactor(), {}, multiplier};
  for (const auto& [j, mult] : t.factors()) {
    // 1 - q^j = -prod_{d | j} Phi_d(q)
    if (mult % 2 != 0) e.sign = -e.sign;
    for (int d : divisors(j)) {
      auto it = e.cyclo.try_emplace(d, 0).first;
      it->second += mult;
      if (it->second == 0) e.cyclo.erase(it);
    }
  }
  terms_.push_back(std::move(e));
}

std::map<int, int> QSum::denominator() const {
  std::map<int, int> den;
  for (const auto& t : terms_) {
    for (const auto& [d, e] : t.cyclo) {
      if (e < 0) {
        int& slot = den[d];
        slot = std::max(slot, -e);
      }
    }
  }
  return den;
}

LaurentPoly QSum::numerator() const {
  const auto den = denominator();
  std::map<int, LaurentPoly> phi;
  std::map<std::pair<int, int>, LaurentPoly> powers;
  auto phi_pow = [&](int d, int e) -> const LaurentPoly& {
    auto key = std::pair{d, e};
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    auto pit = phi.find(d);
    if (pit == phi.end()) pit = phi.emplace(d, cyclotomic(d, carrier_)).first;
    return powers.emplace(key, pit->second.pow(e)).first->second;
  };

  LaurentPoly num;
  for (const auto& t : terms_) {
    std::map<int, int> exps = t.cyclo;
    for (const auto& [d, e] : den) exps[d] += e;
    std::vector<LaurentPoly> fs;
    fs.reserve(exps.size() + 1);
    fs.push_back(t.multiplier.times(t.prefactor, t.sign));
    for (const auto& [d, e] : exps) {
      if (e > 0) fs.push_back(phi_pow(d, e));
    }
    num += product(std::move(fs));
  }
  return num;
}

LaurentPoly QSum::to_poly() const {
  LaurentPoly num = numerator();
  if (num.is_zero()) return num;
  for (const auto& [d, e] : denominator()) {
    const LaurentPoly phi = cyclotomic(d, carrier_);
    for (int i = 0; i < e; ++i) {
      auto q = try_divide(num, phi);
      if (!q) {
        throw InexactDivision("q-sum does not clear: cyclotomic factor Phi_" + std::to_string(d) +
                              " remains in the denominator");
      }
      num = *std::move(q);
    }
  }
  return num;
}

RatFunc QSum::to_ratfunc() const {
  LaurentPoly num = numerator();
  if (num.is_zero()) return {};
  std::vector<LaurentPoly> den;
  for (const auto& [d, e] : denominator()) den.push_back(cyclotomic(d, carrier_).pow(e));
  return RatFunc(std::move(num), product(std::move(den)));
}

}  // namespace qtwist::exactalg
