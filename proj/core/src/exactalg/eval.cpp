#include "qtwist/exactalg/eval.hpp"

#include <bit>
#include <string>
#include <utility>

#include "qtwist/errors.hpp"

namespace qtwist::exactalg {

namespace {

struct Evaluated {
  Complex value;
  Real magnitude;  // sum over terms of |c| * prod |x|^e
};

Evaluated eval_with_bound(const LaurentPoly& f, const ComplexBindings& at, mpfr_prec_t work) {
  std::map<std::pair<Var, int>, Complex> powers;
  auto power = [&](Var v, int e) -> const Complex& {
    auto key = std::pair{v, e};
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    auto b = at.find(v);
    if (b == at.end()) {
      throw DomainError("no value bound for variable " + std::string(var_name(v)));
    }
    Complex z = b->second.with_prec(work);
    if (e < 0 && z.is_zero()) {
      throw DomainError("negative power of " + std::string(var_name(v)) + " bound to zero");
    }
    return powers.emplace(key, z.pow(e)).first->second;
  };

  Complex sum(work);
  Real mag(work);
  for (const auto& t : f.terms()) {
    Complex term(Real(t.coeff, work));
    for (Var v : kAllVars) {
      int e = t.mono.exponent(v);
      if (e != 0) term *= power(v, e);
    }
    mag += abs(term);
    sum += term;
  }
  return {std::move(sum), std::move(mag)};
}

}  // namespace

int eval_guard_bits(std::size_t term_count) {
  return 32 + static_cast<int>(std::bit_width(term_count));
}

Complex eval_complex(const LaurentPoly& f, const ComplexBindings& at, mpfr_prec_t prec) {
  const mpfr_prec_t work = prec + eval_guard_bits(f.size());
  return eval_with_bound(f, at, work).value.with_prec(prec);
}

Complex eval_complex(const RatFunc& f, const ComplexBindings& at, mpfr_prec_t prec) {
  const mpfr_prec_t work =
      prec + eval_guard_bits(std::max(f.num().size(), f.den().size()));
  Evaluated num = eval_with_bound(f.num(), at, work);
  Evaluated den = eval_with_bound(f.den(), at, work);
  Real noise = den.magnitude * Real::pow2(-static_cast<long>(work) + 8, work);
  if (abs(den.value) <= noise) {
    throw DomainError("denominator vanishes at the evaluation point to working precision");
  }
  return (num.value / den.value).with_prec(prec);
}

}  // namespace qtwist::exactalg
