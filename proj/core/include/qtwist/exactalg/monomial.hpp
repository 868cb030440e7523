#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace qtwist::exactalg {

/// Fixed variable set.  `s` is the half-power variable (s^2 = q); `N`, `K`,
/// `L2` carry q^n, q^k, q^l of the summation indices; `l`, `m` are the
/// longitude/meridian eigenvalues; `x`, `y` the q = 1 limits of q^k, q^l.
/// The summation variable q^l (`L2`) and the longitude `l` never alias.
enum class Var : std::uint8_t { s, q, N, K, L2, l, m, x, y };

inline constexpr std::size_t kVarCount = 9;

inline constexpr std::array<Var, kVarCount> kAllVars = {
    Var::s, Var::q, Var::N, Var::K, Var::L2, Var::l, Var::m, Var::x, Var::y};

std::string_view var_name(Var v);
std::optional<Var> parse_var(std::string_view name);

constexpr std::size_t index_of(Var v) { return static_cast<std::size_t>(v); }

/// A Laurent monomial: one signed exponent per variable.  Ordering is
/// lexicographic over the fixed variable order, so it is a monomial order
/// (compatible with multiplication) and gives reproducible canonical forms.
class Monomial {
 public:
  Monomial() = default;

  static Monomial of(Var v, int e = 1) {
    Monomial m;
    m.exps_[index_of(v)] = e;
    return m;
  }

  int exponent(Var v) const { return exps_[index_of(v)]; }
  Monomial& set(Var v, int e) {
    exps_[index_of(v)] = e;
    return *this;
  }

  std::span<const int, kVarCount> exponents() const { return exps_; }

  bool is_one() const {
    for (int e : exps_) {
      if (e != 0) return false;
    }
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kVarCount; ++i) r.exps_[i] = exps_[i] + o.exps_[i];
    return r;
  }
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kVarCount; ++i) r.exps_[i] = exps_[i] - o.exps_[i];
    return r;
  }
  Monomial& operator*=(const Monomial& o) { return *this = *this * o; }

  Monomial pow(int e) const {
    Monomial r;
    for (std::size_t i = 0; i < kVarCount; ++i) r.exps_[i] = exps_[i] * e;
    return r;
  }

  /// Total order used for canonical forms.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  /// `s^2*l^-1` style rendering; empty string for the unit monomial.
  std::string to_string() const;

 private:
  std::array<int, kVarCount> exps_{};
};

/// q^j expressed in a chosen carrier: `q^j` itself, or `s^(2j)`.
inline Monomial q_power(int j, Var carrier) {
  return carrier == Var::s ? Monomial::of(Var::s, 2 * j) : Monomial::of(carrier, j);
}

}  // namespace qtwist::exactalg
