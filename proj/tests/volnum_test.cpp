#include <gtest/gtest.h>

#include <random>

#include "qtwist/errors.hpp"
#include "qtwist/exactalg/eval.hpp"
#include "qtwist/jones/jones.hpp"
#include "qtwist/volnum/volnum.hpp"
#include "test_util.hpp"

using namespace qtwist;
using namespace qtwist::exactalg;
using namespace qtwist::volnum;

namespace {

constexpr mpfr_prec_t kPrec = 128;

Real R(const char* s) { return Real(std::string(s), kPrec); }

double dist(const Complex& a, const Complex& b) { return abs(a - b).to_double(); }

Complex exact_jones_at_root(int p, int n) {
  const LaurentPoly j = jones::colored_jones(p, n, jones::SignConvention::Unsigned);
  return eval_complex(j, {{Var::s, Complex::root_of_unity(1, 2 * n, kPrec + 64)}}, kPrec + 64);
}

}  // namespace

TEST(Dilog, ValueAtOne) {
  const Complex v = dilog(Complex(1.0, 0.0, kPrec), kPrec);
  const Real pi = Real::pi(kPrec);
  EXPECT_LT(abs(v.re() - pi * pi / Real(6L, kPrec)).to_double(), 1e-30);
  EXPECT_TRUE(v.im().is_zero());
}

TEST(Dilog, CatalanAtI) {
  const Complex v = dilog(Complex(0.0, 1.0, kPrec), kPrec);
  EXPECT_LT(abs(v.im() - R("0.91596559417721901505460351493238411077")).to_double(), 1e-30);
  EXPECT_LT(abs(v.re() + Real::pi(kPrec) * Real::pi(kPrec) / Real(48L, kPrec)).to_double(), 1e-30);
}

TEST(Dilog, AgreesAcrossBranchBoundaries) {
  // Li2(z) + Li2(1 - z) = pi^2/6 - log z log(1 - z) relates the different evaluation regions
  const Real pi = Real::pi(kPrec);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.5, 2.5);
  for (int i = 0; i < 200; ++i) {
    const Complex z(u(rng), u(rng), kPrec);
    if (abs(z).to_double() < 0.05 || abs(z - Complex(1.0, 0.0, kPrec)).to_double() < 0.05) continue;
    const Complex w = Complex(1.0, 0.0, kPrec) - z;
    const Complex lhs = dilog(z, kPrec) + dilog(w, kPrec);
    const Complex logz(log(abs(z)), arg(z));
    const Complex logw(log(abs(w)), arg(w));
    const Complex rhs = Complex(pi * pi / Real(6L, kPrec)) - logz * logw;
    EXPECT_LT(dist(lhs, rhs), 1e-30) << z.to_string();
  }
}

TEST(BlochWigner, HexagonalValue) {
  const Real d = bloch_wigner(Complex::root_of_unity(1, 6, kPrec), kPrec);
  EXPECT_NEAR(d.to_double(), 1.014941606409, 1e-12);
}

TEST(BlochWigner, VanishesOnRealAxis) {
  EXPECT_LT(abs(bloch_wigner(Complex(0.37, 0.0, kPrec), kPrec)).to_double(), 1e-35);
  EXPECT_LT(abs(bloch_wigner(Complex(-3.2, 0.0, kPrec), kPrec)).to_double(), 1e-35);
  EXPECT_LT(abs(bloch_wigner(Complex(4.0, 0.0, kPrec), kPrec)).to_double(), 1e-35);
}

TEST(BlochWigner, DomainErrors) {
  EXPECT_THROW(bloch_wigner(Complex(0.0, 0.0, kPrec), kPrec), DomainError);
  EXPECT_THROW(bloch_wigner(Complex(1.0, 0.0, kPrec), kPrec), DomainError);
}

TEST(BlochWigner, SymmetriesAndFiveTermRelation) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const Complex one(1.0, 0.0, kPrec);
  int checked = 0;
  while (checked < 100) {
    const Complex x(u(rng), u(rng), kPrec);
    const Complex y(u(rng), u(rng), kPrec);
    if (abs(x).to_double() < 0.1 || abs(y).to_double() < 0.1 || abs(x - one).to_double() < 0.1 ||
        abs(y - one).to_double() < 0.1 || abs(x - y).to_double() < 0.1) {
      continue;
    }
    ++checked;
    const Real dx = bloch_wigner(x, kPrec);
    EXPECT_LT(abs(bloch_wigner(x.conj(), kPrec) + dx).to_double(), 1e-30);
    EXPECT_LT(abs(bloch_wigner(one / x, kPrec) + dx).to_double(), 1e-30);
    EXPECT_LT(abs(bloch_wigner(one - x, kPrec) + dx).to_double(), 1e-30);
    const Real five = dx + bloch_wigner(y, kPrec) + bloch_wigner((one - x) / (one - x * y), kPrec) +
                      bloch_wigner(one - x * y, kPrec) + bloch_wigner((one - y) / (one - x * y), kPrec);
    EXPECT_LT(abs(five).to_double(), 1e-28) << x.to_string() << " " << y.to_string();
  }
}

TEST(Bernoulli, SmallValues) {
  EXPECT_EQ(bernoulli(0), mpq_class(1));
  EXPECT_EQ(bernoulli(1), mpq_class(-1, 2));
  EXPECT_EQ(bernoulli(2), mpq_class(1, 6));
  EXPECT_EQ(bernoulli(3), mpq_class(0));
  EXPECT_EQ(bernoulli(12), mpq_class(-691, 2730));
}

TEST(Jhat, MatchesExactPolynomialAtRootOfUnity) {
  for (int p : {-2, -1, 1, 2}) {
    for (int n = 3; n <= 12; ++n) {
      const Complex fast = jhat(jones::TwistKnot{p}, n, kPrec);
      const Complex exact = exact_jones_at_root(p, n);
      EXPECT_LT(dist(fast, exact), 1e-25 * std::max(1.0, abs(exact).to_double())) << "p=" << p << " n=" << n;
    }
  }
}

TEST(Jhat, FigureEightSmallValues) {
  EXPECT_LT(dist(jhat(jones::TwistKnot{-1}, 2, kPrec), Complex(5.0, 0.0, kPrec)), 1e-30);
  EXPECT_LT(dist(jhat(jones::TwistKnot{-1}, 3, kPrec), Complex(13.0, 0.0, kPrec)), 1e-30);
}

TEST(Jhat, FigureEightIsReal) {
  for (int n = 2; n <= 40; ++n) {
    const Complex v = jhat(jones::TwistKnot{-1}, n, kPrec);
    EXPECT_LT(abs(v.im()).to_double(), 1e-25 * std::max(1.0, abs(v).to_double())) << n;
    EXPECT_GT(v.re().to_double(), 0.0) << n;
  }
}

TEST(Jhat, StableUnderPrecisionIncrease) {
  for (int p : {-1, 2}) {
    const Complex lo = jhat(jones::TwistKnot{p}, 30, kPrec);
    const Complex hi = jhat(jones::TwistKnot{p}, 30, 2 * kPrec);
    EXPECT_LT(dist(lo, hi), 1e-30 * abs(hi).to_double());
  }
}

TEST(Jhat, NamedKnotsMatchTwistKnots) {
  for (int n = 2; n <= 9; ++n) {
    const Complex f = jhat(jones::Named::FiveTwo, n, kPrec);
    const Complex k2 = jhat(jones::TwistKnot{2}, n, kPrec);
    EXPECT_LT(dist(f, -k2), 1e-25 * std::max(1.0, abs(k2).to_double())) << n;
    const Complex s = jhat(jones::Named::SixOne, n, kPrec);
    const Complex km2 = jhat(jones::TwistKnot{-2}, n, kPrec);
    EXPECT_LT(dist(s, km2), 1e-25 * std::max(1.0, abs(km2).to_double())) << n;
  }
}

TEST(Jhat, RejectsSmallN) {
  EXPECT_THROW(jhat(jones::TwistKnot{1}, 1, kPrec), DomainError);
  EXPECT_THROW(jhat(jones::TwistKnot{1}, 0, kPrec), DomainError);
}

TEST(Resultant, LinearAndQuadratic) {
  const LaurentPoly x = LaurentPoly::variable(Var::x);
  const LaurentPoly y = LaurentPoly::variable(Var::y);
  // Res_x(x - y, x^2 - 2) = y^2 - 2
  const UPoly r = resultant(x - y, x * x - 2, Var::x, Var::y);
  EXPECT_EQ(r, UPoly(std::vector<mpz_class>{-2, 0, 1}));
  // common root forces zero
  EXPECT_TRUE(resultant((x - 1) * (x - y), (x - 1) * (x + y), Var::x, Var::y).is_zero());
  EXPECT_THROW(resultant(x - LaurentPoly::variable(Var::m), x, Var::x, Var::y), DomainError);
}

TEST(Resultant, VanishesOnEverySaddleSolution) {
  const auto [e1, e2] = saddle_equations(2);
  const UPoly r = resultant(e1, e2, Var::x, Var::y);
  EXPECT_GT(r.degree(), 0);
  const SaddleReport rep = saddle_solve(2, kPrec);
  for (const auto& s : rep.solutions) {
    const LaurentPoly as_poly = r.to_laurent(Var::y);
    const Complex v = eval_complex(as_poly, {{Var::y, s.y0}}, kPrec);
    EXPECT_LT(abs(v).to_double(), 1e-20 * std::max(1.0, abs(s.y0).to_double()));
  }
}

TEST(PolynomialRoots, CertifiedDisks) {
  // (y - 2)(y^2 + 1)(y + 1/2) scaled by 2
  const UPoly f(std::vector<mpz_class>{-2, -3, 0, -3, 2});
  const RootSet rs = polynomial_roots(f, kPrec);
  ASSERT_EQ(rs.roots.size(), 4u);
  ASSERT_EQ(rs.radii.size(), 4u);
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    EXPECT_LT(rs.radii[i].to_double(), 1e-30);
    for (std::size_t j = i + 1; j < rs.roots.size(); ++j) {
      EXPECT_GT(abs(rs.roots[i] - rs.roots[j]), rs.radii[i] + rs.radii[j]);
    }
  }
  EXPECT_TRUE(polynomial_roots(UPoly(std::vector<mpz_class>{5}), kPrec).roots.empty());
}

TEST(PolynomialRoots, RepeatedRootIsRejected) {
  const UPoly f(std::vector<mpz_class>{1, -2, 1});
  EXPECT_THROW(polynomial_roots(f, kPrec), NumericalError);
}

TEST(Saddle, OptimisticVolumes) {
  EXPECT_NEAR(optimistic_volume(-1, kPrec).volume.to_double(), 2.029883212819, 1e-6);
  EXPECT_NEAR(optimistic_volume(2, kPrec).volume.to_double(), 2.828122088331, 1e-6);
  EXPECT_NEAR(optimistic_volume(-2, kPrec).volume.to_double(), 3.163963228883, 1e-6);
}

TEST(Saddle, RootCountAndResiduals) {
  const Real bound = Real::pow2(-static_cast<long>(kPrec) / 2, kPrec);
  for (int p : {-4, -3, -2, -1, 1, 2, 3, 4}) {
    const SaddleReport rep = saddle_solve(p, kPrec);
    EXPECT_EQ(rep.p, p);
    EXPECT_EQ(static_cast<int>(rep.solutions.size()) + rep.discarded, rep.eliminant_degree) << p;
    EXPECT_FALSE(rep.solutions.empty()) << p;
    for (const auto& s : rep.solutions) {
      EXPECT_LE(s.residual1, bound);
      EXPECT_LE(s.residual2, bound);
    }
  }
}

TEST(Saddle, ConjugateSolutionsHaveOppositeVolumes) {
  const SaddleReport rep = saddle_solve(-1, kPrec);
  Real top(0.0, kPrec), bottom(0.0, kPrec);
  for (const auto& s : rep.solutions) {
    top = max(top, s.volume_candidate);
    bottom = max(bottom, -s.volume_candidate);
  }
  EXPECT_LT(abs(top - bottom).to_double(), 1e-30);
}

TEST(Saddle, RejectsZero) { EXPECT_THROW(saddle_solve(0, kPrec), DomainError); }

TEST(Kashaev, DeterministicAndSorted) {
  const auto a = kashaev_scan(-1, 5, 12, kPrec);
  const auto b = kashaev_scan(-1, 5, 12, kPrec);
  ASSERT_EQ(a.size(), 8u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].n, static_cast<int>(i) + 5);
    ASSERT_TRUE(a[i].v && b[i].v);
    EXPECT_EQ(a[i].v->to_string(30), b[i].v->to_string(30));
  }
  EXPECT_THROW(kashaev_scan(0, 2, 5, kPrec), DomainError);
  EXPECT_THROW(kashaev_scan(1, 2, 5, kPrec), DomainError);
  EXPECT_THROW(kashaev_scan(-1, 6, 5, kPrec), DomainError);
}

TEST(Kashaev, FigureEightApproachesVolumeFromAbove) {
  const auto scan = kashaev_scan(-1, 60, 60, kPrec);
  ASSERT_EQ(scan.size(), 1u);
  const double v = scan[0].v->to_double();
  EXPECT_GT(v, 2.029883212819);
  EXPECT_LT(v, 3.0);
}
