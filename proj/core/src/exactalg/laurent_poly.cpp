#include "qtwist/exactalg/laurent_poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "qtwist/errors.hpp"

namespace qtwist::exactalg {

namespace {

constexpr std::array<std::string_view, kVarCount> kNames = {"s", "q", "N", "K", "L2",
                                                            "l", "m", "x", "y"};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int e : m.exponents()) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(e)) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

std::vector<Term> sorted_from_map(std::unordered_map<Monomial, mpz_class, MonomialHash>& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [mono, c] : acc) {
    if (c != 0) out.push_back({mono, std::move(c)});
  }
  std::sort(out.begin(), out.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  return out;
}

}  // namespace

std::string_view var_name(Var v) { return kNames[index_of(v)]; }

std::optional<Var> parse_var(std::string_view name) {
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (kNames[i] == name) return kAllVars[i];
  }
  return std::nullopt;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += kNames[i];
    if (exps_[i] != 1) {
      out += '^';
      out += std::to_string(exps_[i]);
    }
  }
  return out;
}

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.push_back({Monomial{}, mpz_class(c)});
}

LaurentPoly::LaurentPoly(const mpz_class& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const mpz_class& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  LaurentPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

int LaurentPoly::max_degree(Var v) const {
  if (terms_.empty()) return 0;
  int d = terms_.front().mono.exponent(v);
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

int LaurentPoly::min_degree(Var v) const {
  if (terms_.empty()) return 0;
  int d = terms_.front().mono.exponent(v);
  for (const auto& t : terms_) d = std::min(d, t.mono.exponent(v));
  return d;
}

bool LaurentPoly::uses(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [v](const Term& t) { return t.mono.exponent(v) != 0; });
}

Monomial LaurentPoly::min_monomial() const {
  Monomial m;
  for (Var v : kAllVars) m.set(v, min_degree(v));
  return m;
}

mpz_class LaurentPoly::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

mpz_class LaurentPoly::constant_term() const {
  for (const auto& t : terms_) {
    if (t.mono.is_one()) return t.coeff;
  }
  return 0;
}

LaurentPoly LaurentPoly::coefficient(Var v, int e) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono.exponent(v) == e) {
      Monomial m = t.mono;
      m.set(v, 0);
      out.push_back({m, t.coeff});
    }
  }
  return from_terms(std::move(out));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->mono < b->mono)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->mono < a->mono) {
      merged.push_back(*b++);
    } else {
      mpz_class c = a->coeff + b->coeff;
      if (c != 0) merged.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_monomial()) return b.times(a.terms_[0].mono, a.terms_[0].coeff);
  if (b.is_monomial()) return a.times(b.terms_[0].mono, b.terms_[0].coeff);
  std::unordered_map<Monomial, mpz_class, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1u << 20));
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      mpz_class& slot = acc[ta.mono * tb.mono];
      mpz_addmul(slot.get_mpz_t(), ta.coeff.get_mpz_t(), tb.coeff.get_mpz_t());
    }
  }
  LaurentPoly r;
  r.terms_ = sorted_from_map(acc);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::times(const Monomial& m, const mpz_class& c) const {
  if (c == 0) return {};
  LaurentPoly r = *this;
  for (auto& t : r.terms_) {
    t.mono *= m;
    t.coeff *= c;
  }
  return r;  // multiplication by a monomial preserves the order
}

LaurentPoly LaurentPoly::divided_by(const mpz_class& c) const {
  if (c == 0) throw DomainError("division of a Laurent polynomial by zero");
  LaurentPoly r = *this;
  for (auto& t : r.terms_) {
    if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t())) {
      throw InexactDivision("coefficient " + t.coeff.get_str() + " not divisible by " +
                            c.get_str());
    }
    mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) {
    if (!is_monomial() || (terms_[0].coeff != 1 && terms_[0].coeff != -1)) {
      throw DomainError("negative power of a non-unit is not a Laurent polynomial");
    }
    const Term& t = terms_[0];
    mpz_class c = (t.coeff == -1 && (e % 2 != 0)) ? mpz_class(-1) : mpz_class(1);
    return monomial(t.mono.pow(e), c);
  }
  LaurentPoly result = 1;
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::substitute(Var v, const LaurentPoly& value) const {
  if (!uses(v)) return *this;
  std::map<int, std::vector<Term>> by_exp;
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    int e = m.exponent(v);
    m.set(v, 0);
    by_exp[e].push_back({m, t.coeff});
  }
  LaurentPoly out;
  for (auto& [e, ts] : by_exp) {
    out += from_terms(std::move(ts)) * value.pow(e);
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const bool neg = it->coeff < 0;
    mpz_class mag = abs(it->coeff);
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono = it->mono.to_string();
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str();
      out += '*';
      out += mono;
    }
  }
  return out;
}

std::optional<LaurentPoly> try_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.is_zero()) return LaurentPoly{};
  const Term& lb = b.leading();
  if (b.is_monomial()) {
    std::vector<Term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), lb.coeff.get_mpz_t())) return std::nullopt;
      mpz_class c;
      mpz_divexact(c.get_mpz_t(), t.coeff.get_mpz_t(), lb.coeff.get_mpz_t());
      out.push_back({t.mono / lb.mono, std::move(c)});
    }
    return LaurentPoly::from_terms(std::move(out));
  }

  // The quotient's exponents in each variable are pinned between the
  // difference of the minimum degrees and the difference of the maximum
  // degrees; leaving that box proves non-divisibility and bounds the loop.
  std::array<int, kVarCount> lo{}, hi{};
  for (Var v : kAllVars) {
    lo[index_of(v)] = a.min_degree(v) - b.min_degree(v);
    hi[index_of(v)] = a.max_degree(v) - b.max_degree(v);
    if (lo[index_of(v)] > hi[index_of(v)]) return std::nullopt;
  }

  std::map<Monomial, mpz_class> rem;
  for (const auto& t : a.terms()) rem.emplace(t.mono, t.coeff);
  std::vector<Term> quot;
  mpz_class c;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    Monomial qm = top->first / lb.mono;
    for (Var v : kAllVars) {
      int e = qm.exponent(v);
      if (e < lo[index_of(v)] || e > hi[index_of(v)]) return std::nullopt;
    }
    if (!mpz_divisible_p(top->second.get_mpz_t(), lb.coeff.get_mpz_t())) return std::nullopt;
    mpz_divexact(c.get_mpz_t(), top->second.get_mpz_t(), lb.coeff.get_mpz_t());
    for (const auto& tb : b.terms()) {
      auto [it, inserted] = rem.try_emplace(qm * tb.mono, 0);
      mpz_submul(it->second.get_mpz_t(), c.get_mpz_t(), tb.coeff.get_mpz_t());
      if (it->second == 0) rem.erase(it);
    }
    quot.push_back({qm, c});
  }
  std::reverse(quot.begin(), quot.end());
  return LaurentPoly::from_terms(std::move(quot));
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw InexactDivision("inexact division: (" + b.to_string() + ") does not divide a " +
                                std::to_string(a.size()) + "-term polynomial");
  return *std::move(q);
}

LaurentPoly strip_monomial(const LaurentPoly& p, Monomial* removed) {
  Monomial m = p.min_monomial();
  if (removed) *removed = m;
  if (m.is_one()) return p;
  return p.times(Monomial{} / m);
}

std::optional<Term> unit_ratio(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero() || a.size() != b.size()) return std::nullopt;
  const Term& la = a.leading();
  const Term& lb = b.leading();
  Term u{la.mono / lb.mono, 0};
  if (la.coeff == lb.coeff) {
    u.coeff = 1;
  } else if (la.coeff == -lb.coeff) {
    u.coeff = -1;
  } else {
    return std::nullopt;
  }
  if (b.times(u.mono, u.coeff) != a) return std::nullopt;
  return u;
}

LaurentPoly product(std::vector<LaurentPoly> factors) {
  if (factors.empty()) return 1;
  while (factors.size() > 1) {
    std::vector<LaurentPoly> next;
    next.reserve((factors.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < factors.size(); i += 2) {
      next.push_back(factors[i] * factors[i + 1]);
    }
    if (factors.size() % 2 == 1) next.push_back(std::move(factors.back()));
    factors = std::move(next);
  }
  return std::move(factors.front());
}

}  // namespace qtwist::exactalg
