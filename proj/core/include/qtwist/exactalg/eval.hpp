#pragma once

#include <map>

#include "qtwist/exactalg/hp_complex.hpp"
#include "qtwist/exactalg/rat_func.hpp"

namespace qtwist::exactalg {

using ComplexBindings = std::map<Var, Complex>;

/// Guard bits added to the requested precision: 32 plus the bit length of
/// the term count.  The absolute error of eval_complex on a polynomial is at
/// most 2^(-prec) times the sum of the absolute values of its terms.
int eval_guard_bits(std::size_t term_count);

/// Evaluates at complex points.  Every variable occurring in `f` must be
/// bound; throws DomainError otherwise, or if a variable with a negative
/// exponent is bound to zero.
Complex eval_complex(const LaurentPoly& f, const ComplexBindings& at, mpfr_prec_t prec);

/// Throws DomainError when the denominator is indistinguishable from zero at
/// the working precision.
Complex eval_complex(const RatFunc& f, const ComplexBindings& at, mpfr_prec_t prec);

}  // namespace qtwist::exactalg
