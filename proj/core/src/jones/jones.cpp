#include "qtwist/jones/jones.hpp"

#include <charconv>
#include <string>

#include "qtwist/errors.hpp"

namespace qtwist::jones {

using exactalg::brace;
using exactalg::brace_factorial;
using exactalg::exact_divide;
using exactalg::Monomial;
using exactalg::product;
using exactalg::q_power;
using exactalg::QSum;

namespace {

/// q^a N^n K^k L2^l
LaurentPoly qm(int a, int n = 0, int k = 0, int l = 0, long c = 1) {
  Monomial m;
  m.set(Var::q, a).set(Var::N, n).set(Var::K, k).set(Var::L2, l);
  return LaurentPoly::monomial(m, c);
}

LaurentPoly one_minus(const LaurentPoly& mono) { return LaurentPoly(1) - mono; }

int parse_int(std::string_view text) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw DomainError("not an integer: '" + std::string(text) + "'");
  }
  return v;
}

bool in_support(int n, int k, int l) { return n >= 1 && 0 <= l && l <= k && k <= n - 1; }

int sign_of_parity(int e) { return e % 2 == 0 ? 1 : -1; }

// Factor shared by every summand: q^(nk) (q^-1)_(n+k) (q^-1)_(n-1) / ((q^-1)_n (q^-1)_(n-k-1)).
void mul_n_part(QProduct& t, int n, int k, Var c) {
  t.mul_monomial(q_power(n * k, c));
  t.mul_inv_poch(n + k, 1, c).mul_inv_poch(n - 1, 1, c);
  t.div_inv_poch(n, c).div_inv_poch(n - k - 1, c);
}

Generator n_shift_generator() {
  // B = (1 - q^(-n-1)) (1 - q^(-n+k)),  A = q^k (1 - q^(-n-k-1)) (1 - q^-n)
  return {one_minus(qm(-1, -1)) * one_minus(qm(0, -1, 1)),
          qm(0, 0, 1) * one_minus(qm(-1, -1, -1)) * one_minus(qm(0, -1)), Direction::NShift};
}

std::vector<Generator> twist_generators(int p, bool variant) {
  std::vector<Generator> gens{n_shift_generator()};
  gens.push_back({one_minus(qm(2, 0, 1, 1)) * one_minus(qm(1, 0, 1, -1)),
                  qm(2, 1, 1, 0, -1) * one_minus(qm(-1, -1, -1)) * one_minus(qm(1, -1, 1)) *
                      one_minus(qm(variant ? 0 : 1, 0, 1)),
                  Direction::KShift});
  LaurentPoly a2 = qm(2 * p, 0, 0, 2 * p + 1) * (qm(3, 0, 0, 2) - 1) * one_minus(qm(0, 0, 1, -1));
  gens.push_back({(qm(1, 0, 0, 2) - 1) * one_minus(qm(2, 0, 1, 1)),
                  variant ? a2 : -a2, Direction::LShift});
  return gens;
}

}  // namespace

std::string knot_name(const KnotId& knot) {
  if (const auto* t = std::get_if<TwistKnot>(&knot)) return "K_" + std::to_string(t->p);
  return std::get<Named>(knot) == Named::FiveTwo ? "5_2" : "6_1";
}

KnotId parse_knot(std::string_view text) {
  if (text == "5_2") return Named::FiveTwo;
  if (text == "6_1") return Named::SixOne;
  if (text.starts_with("K_")) text.remove_prefix(2);
  return TwistKnot{parse_int(text)};
}

std::string_view convention_name(SignConvention c) {
  switch (c) {
    case SignConvention::Alternating: return "alternating";
    case SignConvention::LeadingTermFlipped: return "k0-flipped";
    case SignConvention::Unsigned: return "unsigned";
  }
  return "alternating";
}

SignConvention parse_convention(std::string_view text) {
  if (text == "alternating") return SignConvention::Alternating;
  if (text == "k0-flipped") return SignConvention::LeadingTermFlipped;
  if (text == "unsigned") return SignConvention::Unsigned;
  throw DomainError("unknown sign convention '" + std::string(text) + "'");
}

LaurentPoly masbaum_coeff(int p, int k, SignConvention sign) {
  if (k < 0) throw DomainError("masbaum_coeff needs k >= 0");
  const LaurentPoly common = brace_factorial(2 * k + 1);
  LaurentPoly sum;
  for (int l = 0; l <= k; ++l) {
    // {2k+1}! / ({k+l+1}! {k-l}!) = {k+l+2}...{2k+1} / {k-l}!
    std::vector<LaurentPoly> upper;
    for (int j = k + l + 2; j <= 2 * k + 1; ++j) upper.push_back(brace(j));
    LaurentPoly cofactor = exact_divide(product(std::move(upper)), brace_factorial(k - l));
    LaurentPoly term = brace(2 * l + 1) * cofactor;
    sum += term.times(Monomial::of(Var::s, 2 * l * (l + 1) * p), sign_of_parity(l));
  }
  LaurentPoly c = exact_divide(brace_factorial(k) * sum, common);
  int overall = 1;
  switch (sign) {
    case SignConvention::Alternating: overall = sign_of_parity(k + 1); break;
    case SignConvention::LeadingTermFlipped: overall = k == 0 ? 1 : sign_of_parity(k + 1); break;
    case SignConvention::Unsigned: overall = 1; break;
  }
  return c.times(Monomial::of(Var::s, k * (k + 3) / 2), overall);
}

LaurentPoly masbaum_term(int p, int n, int k, SignConvention sign) {
  if (k >= n) return {};
  std::vector<LaurentPoly> fs{masbaum_coeff(p, k, sign)};
  for (int j = n - k; j <= n + k; ++j) {
    if (j != n) fs.push_back(brace(j));
  }
  return product(std::move(fs));
}

LaurentPoly colored_jones(int p, int n, SignConvention sign) {
  if (n < 1) throw DomainError("colored Jones needs n >= 1");
  LaurentPoly j;
  for (int k = 0; k < n; ++k) j += masbaum_term(p, n, k, sign);
  return j;
}

QProduct summand_term(const KnotId& knot, int n, int k, int l, Var c) {
  if (!in_support(n, k, l)) return QProduct::zero();
  QProduct t;
  if (const auto* tk = std::get_if<TwistKnot>(&knot)) {
    const int p = tk->p;
    // (-1)^(k+1) q^(k(k+3)/2) ... (-1)^l q^(l(l+1)p + l(l-1)/2) (q^(2l+1) - 1) (q)_k / ((q)_(k+l+1) (q)_(k-l))
    t.mul_monomial(q_power(k * (k + 3) / 2 + l * (l + 1) * p + l * (l - 1) / 2, c),
                   -sign_of_parity(k + 1 + l));
    t.mul_factor(2 * l + 1, 1, c);
    t.mul_poch(k, 1, c).div_poch(k + l + 1, c).div_poch(k - l, c);
  } else if (std::get<Named>(knot) == Named::FiveTwo) {
    // (-1)^(k+1) q^((3k^2+5k)/2) ... q^(-l(k+1)) (q^-1)_k / ((q^-1)_l (q^-1)_(k-l))
    t.mul_monomial(q_power((3 * k * k + 5 * k) / 2 - l * (k + 1), c), sign_of_parity(k + 1));
    t.mul_inv_poch(k, 1, c).div_inv_poch(l, c).div_inv_poch(k - l, c);
  } else {
    // q^(-k^2-k) ... q^(l(k+1)) (q)_k / ((q)_l (q)_(k-l))
    t.mul_monomial(q_power(-k * k - k + l * (k + 1), c));
    t.mul_poch(k, 1, c).div_poch(l, c).div_poch(k - l, c);
  }
  mul_n_part(t, n, k, c);
  return t;
}

RatFunc summand_F(const KnotId& knot, int n, int k, int l) {
  QSum s(Var::q);
  s.add(summand_term(knot, n, k, l, Var::q));
  return s.to_ratfunc();
}

LaurentPoly colored_jones_multisum(const KnotId& knot, int n) {
  if (n < 1) throw DomainError("colored Jones needs n >= 1");
  QSum s(Var::s);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l <= k; ++l) s.add(summand_term(knot, n, k, l, Var::s));
  }
  return s.to_poly();
}

LaurentPoly habiro_normalize(const LaurentPoly& jn, const LaurentPoly& j1) { return exact_divide(jn, j1); }

std::string_view direction_name(Direction d) {
  switch (d) {
    case Direction::NShift: return "n";
    case Direction::KShift: return "k";
    case Direction::LShift: return "l";
  }
  return "n";
}

std::vector<Generator> annihilator_generators(const KnotId& knot) {
  if (const auto* tk = std::get_if<TwistKnot>(&knot)) return twist_generators(tk->p, false);
  std::vector<Generator> gens{n_shift_generator()};
  const LaurentPoly n_part = one_minus(qm(-1, -1, -1)) * one_minus(qm(1, -1, 1));
  if (std::get<Named>(knot) == Named::FiveTwo) {
    gens.push_back({one_minus(qm(-1, 0, -1, 1)),
                    qm(4, 1, 3, -1, -1) * n_part * one_minus(qm(-1, 0, -1)), Direction::KShift});
    gens.push_back({one_minus(qm(-1, 0, 0, -1)), qm(-1, 0, -1) * one_minus(qm(0, 0, -1, 1)),
                    Direction::LShift});
  } else {
    gens.push_back({one_minus(qm(1, 0, 1, -1)), qm(-2, 1, -2, 1) * n_part * one_minus(qm(1, 0, 1)),
                    Direction::KShift});
    gens.push_back({one_minus(qm(1, 0, 0, 1)), qm(1, 0, 1) * one_minus(qm(0, 0, 1, -1)),
                    Direction::LShift});
  }
  return gens;
}

std::vector<Generator> variant_twist_generators(int p) { return twist_generators(p, true); }

SummandSpec shift_ratios(const KnotId& knot) {
  auto gens = annihilator_generators(knot);
  return {knot, RatFunc(gens[0].a, gens[0].b), RatFunc(gens[1].a, gens[1].b), RatFunc(gens[2].a, gens[2].b)};
}

SummandSpec shift_ratios(int p) { return shift_ratios(TwistKnot{p}); }

LaurentPoly specialize_indices(const LaurentPoly& f, int n, int k, int l) {
  return f.map_monomials([=](const Monomial& m) {
    Monomial r = m;
    r.set(Var::q, m.exponent(Var::q) + n * m.exponent(Var::N) + k * m.exponent(Var::K) +
                      l * m.exponent(Var::L2));
    r.set(Var::N, 0).set(Var::K, 0).set(Var::L2, 0);
    return std::pair{r, 1};
  });
}

RatFunc generator_residual(const KnotId& knot, const Generator& g, int n, int k, int l) {
  int n1 = n, k1 = k, l1 = l;
  switch (g.direction) {
    case Direction::NShift: ++n1; break;
    case Direction::KShift: ++k1; break;
    case Direction::LShift: ++l1; break;
  }
  QSum s(Var::q);
  s.add(summand_term(knot, n1, k1, l1), specialize_indices(g.b, n, k, l));
  s.add(summand_term(knot, n, k, l), -specialize_indices(g.a, n, k, l));
  return s.to_ratfunc();
}

}  // namespace qtwist::jones
