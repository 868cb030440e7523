#pragma once

#include <optional>
#include <vector>

#include "qtwist/exactalg/hp_complex.hpp"
#include "qtwist/exactalg/upoly.hpp"
#include "qtwist/jones/jones.hpp"

namespace qtwist::volnum {

using exactalg::Complex;
using exactalg::LaurentPoly;
using exactalg::Real;
using exactalg::UPoly;
using exactalg::Var;

/// Principal branch of Li_2.  Power series for |z| <= 1/2, the reflection
/// Li_2(z) = pi^2/6 - log(z) log(1-z) - Li_2(1-z) near 1, the Bernoulli
/// series in -log(1-z) on the rest of the unit disk, and the inversion
/// formula outside it.  Throws NumericalError if a series does not converge
/// within its term budget.
Complex dilog(const Complex& z, mpfr_prec_t prec);

/// D(z) = Im Li_2(z) + log|z| arg(1 - z).  Throws DomainError at z = 0, 1.
Real bloch_wigner(const Complex& z, mpfr_prec_t prec);

/// The k-th Bernoulli number (B_1 = -1/2).
mpq_class bernoulli(int k);

/// J_K(n) at q = exp(2 pi i / n).  Twist knots use the double sum over
/// 0 <= l <= k <= n-1 of
///   (-1)^(k+l) q^(k(k+3)/2) (q)_k (q^-1)_k q^(l(l+1)p + l(l-1)/2) (1 - q^(2l+1)) (q)_k / ((q)_(k+l+1) (q)_(k-l));
/// 5_2 and 6_1 use their own multisums with n fixed.  Every factor is
/// expanded to first order at q = zeta e^eps; the simple poles cancel in the
/// sum and the eps^0 coefficient is returned.  Working precision grows until
/// cancellation leaves `prec` bits.  Throws DomainError for n < 2 and
/// NumericalError if the poles do not cancel.
Complex jhat(const jones::KnotId& knot, int n, mpfr_prec_t prec);

/// Resultant of f and g with respect to `eliminate`, as a polynomial in
/// `keep`.  Both inputs must be polynomials in those two variables only.
UPoly resultant(const LaurentPoly& f, const LaurentPoly& g, Var eliminate, Var keep);

struct RootSet {
  std::vector<Complex> roots;
  std::vector<Real> radii;  // each disk |z - root| <= radius holds exactly one root
};

/// All complex roots of a squarefree polynomial by Aberth iteration, with
/// disjoint inclusion disks.  Throws NumericalError listing the residuals if
/// the disks cannot be separated.
RootSet polynomial_roots(const UPoly& f, mpfr_prec_t prec);

/// The two cleared saddle equations for K_p:
///   (1 - x)^3 y - (1 - xy)(y - x) = 0
///   x (y^(2p) + y) - (y^(2p+1) + 1) = 0              (p >= 0)
///   x (1 + y^(2|p|+1)) - (y + y^(2|p|)) = 0          (p < 0)
std::pair<LaurentPoly, LaurentPoly> saddle_equations(int p);

struct SaddleSolution {
  Complex x0;
  Complex y0;
  Real volume_candidate;
  Real residual1;
  Real residual2;
};

struct SaddleReport {
  int p = 0;
  int eliminant_degree = 0;  // of the squarefree eliminant in y
  int discarded = 0;         // roots on a degenerate locus
  std::vector<SaddleSolution> solutions;
};

/// Eliminates x, solves for y, back-substitutes and discards roots with
/// y = 0, x = 0, x = 1, xy = 1 or y = x.  Throws DomainError for p = 0.
SaddleReport saddle_solve(int p, mpfr_prec_t prec);

/// 3 D(x) - D(xy) - D(x/y).
Real volume_candidate(const Complex& x, const Complex& y, mpfr_prec_t prec);

struct VolumeResult {
  Real volume;
  std::size_t index;  // into report.solutions
  SaddleReport report;
};

/// The largest volume candidate over all saddle solutions.
VolumeResult optimistic_volume(int p, mpfr_prec_t prec);

struct KashaevEntry {
  int n;
  std::optional<Real> v;  // empty when |J(n)| = 0
};

/// v_n = 2 pi log|J(n)| / n for each n in [n_min, n_max], sorted by n.
std::vector<KashaevEntry> kashaev_scan(int p, int n_min, int n_max, mpfr_prec_t prec);

}  // namespace qtwist::volnum
