#include "qtwist/exactalg/rat_func.hpp"

#include <algorithm>
#include <vector>

#include "qtwist/errors.hpp"

namespace qtwist::exactalg {

RatFunc::RatFunc(LaurentPoly num) : num_(std::move(num)), den_(1) {}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  mpz_class g = gcd(num_.content(), den_.content());
  if (g != 1) {
    num_ = num_.divided_by(g);
    den_ = den_.divided_by(g);
  }
  Monomial shift = den_.min_monomial();
  if (!shift.is_one()) {
    Monomial inv = Monomial{} / shift;
    num_ = num_.times(inv);
    den_ = den_.times(inv);
  }
  if (den_.leading().coeff < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  // A monomial denominator folds entirely into the numerator.
  if (den_.is_monomial() && den_.leading().coeff != 1) {
    auto q = try_divide(num_, den_);
    if (q) {
      num_ = *std::move(q);
      den_ = 1;
    }
  }
}

LaurentPoly RatFunc::to_poly() const {
  if (is_polynomial()) return num_;
  return exact_divide(num_, den_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  if (a.is_polynomial()) return RatFunc(a.num_ * b.den_ + b.num_, b.den_);
  if (b.is_polynomial()) return RatFunc(a.num_ + b.num_ * a.den_, a.den_);
  if (auto r = try_divide(b.den_, a.den_)) return RatFunc(a.num_ * *r + b.num_, b.den_);
  if (auto r = try_divide(a.den_, b.den_)) return RatFunc(a.num_ + b.num_ * *r, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Cancel obvious cross factors before multiplying out.
  if (a.num_ == b.den_) return RatFunc(b.num_, a.den_);
  if (b.num_ == a.den_) return RatFunc(a.num_, b.den_);
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DomainError("inverse of the zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return RatFunc(num_.pow(e), den_.pow(e));
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

struct PolyQuotient {
  LaurentPoly num;
  LaurentPoly den;
};

PolyQuotient substitute_poly(const LaurentPoly& f, const Bindings& bindings) {
  // Exponent window [lo, hi] (always containing 0) of each bound variable.
  struct Bound {
    Var var;
    const RatFunc* value;
    int lo;
    int hi;
    std::vector<LaurentPoly> num_pows;  // a^0 .. a^(hi-lo)
    std::vector<LaurentPoly> den_pows;  // b^0 .. b^(hi-lo)
  };
  std::vector<Bound> bound;
  for (const auto& [v, value] : bindings) {
    if (!f.uses(v)) continue;
    Bound b{v, &value, std::min(0, f.min_degree(v)), std::max(0, f.max_degree(v)), {}, {}};
    const int span = b.hi - b.lo;
    b.num_pows.reserve(span + 1);
    b.den_pows.reserve(span + 1);
    b.num_pows.emplace_back(1);
    b.den_pows.emplace_back(1);
    for (int i = 1; i <= span; ++i) {
      b.num_pows.push_back(b.num_pows.back() * value.num());
      b.den_pows.push_back(b.den_pows.back() * value.den());
    }
    bound.push_back(std::move(b));
  }
  if (bound.empty()) return {f, 1};

  LaurentPoly den = 1;
  for (const auto& b : bound) den *= b.den_pows[b.hi] * b.num_pows[-b.lo];

  // Group terms by their exponent vector in the bound variables so each
  // distinct product of powers is formed once.
  std::map<std::vector<int>, std::vector<Term>> groups;
  for (const auto& t : f.terms()) {
    std::vector<int> key;
    key.reserve(bound.size());
    Monomial rest = t.mono;
    for (const auto& b : bound) {
      key.push_back(t.mono.exponent(b.var));
      rest.set(b.var, 0);
    }
    groups[key].push_back({rest, t.coeff});
  }
  LaurentPoly num;
  for (auto& [key, ts] : groups) {
    LaurentPoly part = LaurentPoly::from_terms(std::move(ts));
    for (std::size_t i = 0; i < bound.size(); ++i) {
      const auto& b = bound[i];
      const int e = key[i];
      part *= b.num_pows[e - b.lo] * b.den_pows[b.hi - e];
    }
    num += part;
  }
  return {std::move(num), std::move(den)};
}

}  // namespace

RatFunc substitute(const LaurentPoly& f, const Bindings& bindings) {
  auto [num, den] = substitute_poly(f, bindings);
  if (den.is_zero()) throw DomainError("substitution makes a denominator vanish");
  return RatFunc(std::move(num), std::move(den));
}

RatFunc substitute(const RatFunc& f, const Bindings& bindings) {
  auto top = substitute_poly(f.num(), bindings);
  auto bottom = substitute_poly(f.den(), bindings);
  if (bottom.num.is_zero() || top.den.is_zero() || bottom.den.is_zero()) {
    throw DomainError("substitution makes a denominator vanish");
  }
  if (top.den == bottom.den) return RatFunc(std::move(top.num), std::move(bottom.num));
  return RatFunc(top.num * bottom.den, top.den * bottom.num);
}

}  // namespace qtwist::exactalg
