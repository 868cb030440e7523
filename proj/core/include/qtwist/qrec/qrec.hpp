#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtwist/apoly/apoly.hpp"
#include "qtwist/exactalg/rat_func.hpp"
#include "qtwist/jones/jones.hpp"

namespace qtwist::qrec {

using exactalg::LaurentPoly;
using exactalg::RatFunc;
using exactalg::Term;
using exactalg::Var;

enum class Kind { KFree, Inhomogeneous };

std::string_view kind_name(Kind k);  // "kfree" / "inhom"

/// One term sigma(q, N) * F(n+i, k+jk, l+jl), or sigma(q, N) * J(n+i) for
/// sequence recurrences.  N stands for q^n.
struct RecurrenceTerm {
  std::vector<int> shift;  // {i} or {i, jk, jl}
  RatFunc coeff;

  friend bool operator==(const RecurrenceTerm&, const RecurrenceTerm&) = default;
};

struct RecurrenceSpec {
  std::string name;
  Kind kind = Kind::KFree;
  jones::KnotId knot = jones::TwistKnot{0};
  std::vector<RecurrenceTerm> terms;

  friend bool operator==(const RecurrenceSpec&, const RecurrenceSpec&) = default;
};

/// Parses the line-oriented fixture format:
///
///   recurrence <name> kind=<kfree|inhom> knot=<K_p|5_2|6_1>
///   term shift=(i[,jk,jl]) num= <c>*q^<a>*N^<b> [+ ...] den= <c>*q^<a>*N^<b> [+ ...]
///
/// `#` starts a comment.  Throws ParseError carrying line and column.
RecurrenceSpec parse_recurrence(std::string_view text);
RecurrenceSpec load_recurrence(const std::filesystem::path& path);

/// Inverse of parse_recurrence.
std::string serialize(const RecurrenceSpec& spec);

/// The coefficient with N replaced by q^n.
RatFunc specialize_coefficient(const RatFunc& coeff, int n);

enum class GridMode {
  Interior,  // every shifted index stays on the lattice n >= 1, k >= 0, l >= 0
  Full,      // every in-support point, with F := 0 off the support
};

std::string_view grid_mode_name(GridMode m);
GridMode parse_grid_mode(std::string_view text);

struct Residual {
  int n, k, l;
  RatFunc value;
};

struct KFreeReport {
  int n_min = 0;
  int n_max = 0;
  GridMode mode = GridMode::Interior;
  int points = 0;
  std::vector<Residual> nonzero;  // sorted by (n, k, l)
  std::string note;

  bool ok() const { return points > 0 && nonzero.empty(); }
};

/// Sum of coeff * F(shifted) at every grid point with n_min <= n <= n_max.
KFreeReport check_kfree(const RecurrenceSpec& spec, int n_min, int n_max, GridMode mode = GridMode::Interior);

/// Exact residual at one point.
RatFunc kfree_residual(const RecurrenceSpec& spec, int n, int k, int l);

struct Q1Result {
  bool exact = false;
  LaurentPoly poly;         // the left-hand side at q = 1 when exact
  LaurentPoly denominator;  // common denominator in m
  LaurentPoly remainder;    // nonzero iff inexact; one pseudo-remainder per power of l
};

/// Sets q = 1, N = m^2, J(n+i) = l^i and sums over the lcm of the
/// coefficient denominators.  Throws DomainError for sequence-less specs or
/// a coefficient whose denominator vanishes at q = 1.
Q1Result specialize_q1(const RecurrenceSpec& spec);

struct CompareReport {
  int p = 0;
  int abelian_power = 0;     // exponent of (1 + m^2 l) divided out
  LaurentPoly factor;        // what remains, before unit normalization
  std::optional<Term> unit;  // factor = unit * reference when found
  bool equal = false;
  std::vector<apoly::CoefficientDiff> diff;  // reference vs unit-normalized factor
};

/// Strips (1 + m^2 l) as often as it divides, then compares with `reference`.
CompareReport compare_factor(const LaurentPoly& poly, const LaurentPoly& reference);
/// compare_factor against a_polynomial(p).
CompareReport compare_with_apoly(const LaurentPoly& poly, int p);

}  // namespace qtwist::qrec
