#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qtwist/exactalg/qpoch.hpp"
#include "qtwist/exactalg/rat_func.hpp"

namespace qtwist::jones {

using exactalg::LaurentPoly;
using exactalg::QProduct;
using exactalg::RatFunc;
using exactalg::Term;
using exactalg::Var;

struct TwistKnot {
  int p;
  friend bool operator==(const TwistKnot&, const TwistKnot&) = default;
};

enum class Named { FiveTwo, SixOne };

/// TwistKnot(0) is the unknot, 1 the trefoil, -1 the figure-eight,
/// 2 is 5_2 and -2 is 6_1.  Named knots select the dedicated closed-form
/// multisums for 5_2 and 6_1.
using KnotId = std::variant<TwistKnot, Named>;

/// "K_p" / "5_2" / "6_1".
std::string knot_name(const KnotId& knot);
/// Accepts "5_2", "6_1", "K_<p>" or a bare integer p; throws DomainError.
KnotId parse_knot(std::string_view text);

/// Overall sign of Masbaum's coefficient C_{K_p}(k).
enum class SignConvention {
  Alternating,         // (-1)^(k+1) on each coefficient; J(1) = -1
  LeadingTermFlipped,  // alternating, but C(0) = +1
  Unsigned,            // (-1)^(k+1) dropped; J(1) = +1
};

std::string_view convention_name(SignConvention c);
SignConvention parse_convention(std::string_view text);

/// C_{K_p}(k) in s, assembled over the common denominator {2k+1}! and
/// exact-divided.  Requires k >= 0.
LaurentPoly masbaum_coeff(int p, int k, SignConvention sign = SignConvention::Alternating);

/// C_{K_p}(k) {n-k}...{n+k} / {n}, which vanishes for k >= n.
LaurentPoly masbaum_term(int p, int n, int k, SignConvention sign = SignConvention::Alternating);

/// J_{K_p}(n) in s from Masbaum's formula, summed over 0 <= k <= n-1.
/// Throws DomainError for n < 1.
LaurentPoly colored_jones(int p, int n, SignConvention sign = SignConvention::Alternating);

/// The summand F(n, k, l) as a q-product in `carrier` (q, or s).  Zero
/// outside the support n >= 1, 0 <= l <= k <= n-1.
QProduct summand_term(const KnotId& knot, int n, int k, int l, Var carrier = Var::q);

/// F(n, k, l) as an exact rational function of q.
RatFunc summand_F(const KnotId& knot, int n, int k, int l);

/// Double sum of F over its support, expressed in s (q = s^2).
/// Throws DomainError for n < 1.
LaurentPoly colored_jones_multisum(const KnotId& knot, int n);

/// Divides by the value at n = 1 (a unit), giving the unknot-normalized form.
LaurentPoly habiro_normalize(const LaurentPoly& jn, const LaurentPoly& j1);

/// Closed forms of F(n+1,k,l)/F, F(n,k+1,l)/F and F(n,k,l+1)/F as rational
/// functions in (q, N, K, L2) with N = q^n, K = q^k, L2 = q^l.
struct SummandSpec {
  KnotId knot;
  RatFunc f0;
  RatFunc f1;
  RatFunc f2;
};

SummandSpec shift_ratios(int p);
SummandSpec shift_ratios(const KnotId& knot);

enum class Direction { NShift, KShift, LShift };
std::string_view direction_name(Direction d);

/// A pair with B * F(shifted) - A * F = 0 on the support.
struct Generator {
  LaurentPoly b;
  LaurentPoly a;
  Direction direction;
};

std::vector<Generator> annihilator_generators(const KnotId& knot);

/// A variant of the twist-knot generators B, A, B1, A1, B2, A2 in which A1
/// has the factor (1 - q^k) where F(n,k+1,l)/F(n,k,l) has (1 - q^(k+1)), and
/// A2 carries no leading minus.  Neither variant generator annihilates F.
std::vector<Generator> variant_twist_generators(int p);

/// Evaluates a polynomial in (q, N, K, L2) at N = q^n, K = q^k, L2 = q^l.
LaurentPoly specialize_indices(const LaurentPoly& f, int n, int k, int l);

/// B * F(shifted) - A * F at (n, k, l), as an exact rational function of q.
RatFunc generator_residual(const KnotId& knot, const Generator& g, int n, int k, int l);

}  // namespace qtwist::jones
