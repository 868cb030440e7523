#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "qtwist/errors.hpp"
#include "qtwist/exactalg/poly_io.hpp"
#include "qtwist/qrec/qrec.hpp"
#include "test_util.hpp"

using namespace qtwist;
using namespace qtwist::qrec;
using exactalg::parse_poly;

namespace {

RecurrenceSpec fixture(const std::string& name) {
  return load_recurrence(std::string(QTWIST_FIXTURE_DIR) + "/" + name);
}

LaurentPoly P(const char* text) { return parse_poly(text); }

LaurentPoly variant_five_two_factor() {
  return P("m^14 + l*m^4 - l*m^6 + 2*l*m^10 + 2*l*m^12 - l*m^14 + l^2 - 2*l^2*m^2 - 2*l^2*m^4 + l^2*m^8"
           " - l^2*m^10 + l^3");
}

LaurentPoly variant_six_one_factor() {
  return P("m^8 - 2*l*m^4 + 3*l*m^6 + 3*l*m^8 + 2*l*m^14 - l*m^16"
           " + l^2 - 3*l^2*m^2 - l^2*m^4 + 3*l^2*m^6 + 6*l^2*m^8 + 3*l^2*m^10 - l^2*m^12 - 3*l^2*m^14 + l^2*m^16"
           " - l^3 + l^3*m^2 + l^3*m^4 + 3*l^3*m^10 + 3*l^3*m^12 - 2*l^3*m^14 + m^8*l^4");
}

std::set<int> l_degrees(const std::vector<apoly::CoefficientDiff>& diff) {
  std::set<int> out;
  for (const auto& d : diff) out.insert(d.mono.exponent(Var::l));
  return out;
}

}  // namespace

TEST(Fixture, KFreeShape) {
  RecurrenceSpec spec = fixture("five_two_kfree.rec");
  EXPECT_EQ(spec.kind, Kind::KFree);
  EXPECT_EQ(jones::knot_name(spec.knot), "5_2");
  EXPECT_EQ(spec.terms.size(), 16u);
  int max_shift = 0;
  for (const auto& t : spec.terms) {
    max_shift = std::max(max_shift, std::abs(t.shift[0]));
    EXPECT_LE(std::abs(t.shift[1]), 2);
    EXPECT_LE(std::abs(t.shift[2]), 2);
  }
  EXPECT_EQ(max_shift, 5);
}

TEST(Fixture, InhomogeneousShape) {
  for (const char* name : {"five_two_inhom.rec", "five_two_inhom_raw.rec", "six_one_inhom.rec"}) {
    RecurrenceSpec spec = fixture(name);
    EXPECT_EQ(spec.kind, Kind::Inhomogeneous) << name;
    ASSERT_EQ(spec.terms.size(), 6u) << name;
    for (int i = 0; i < 6; ++i) EXPECT_EQ(spec.terms[i].shift, std::vector<int>{i}) << name;
  }
  EXPECT_EQ(fixture("five_two_inhom.rec").terms[0].coeff, RatFunc(P("q^9*N^7")));
}

TEST(Fixture, RoundTrip) {
  for (const char* name :
       {"five_two_kfree.rec", "five_two_inhom.rec", "five_two_inhom_raw.rec", "six_one_inhom.rec"}) {
    RecurrenceSpec spec = fixture(name);
    EXPECT_EQ(parse_recurrence(serialize(spec)), spec) << name;
  }
}

TEST(Parse, EmptyFileFails) {
  EXPECT_THROW((void)parse_recurrence(""), ParseError);
  EXPECT_THROW((void)parse_recurrence("# only a comment\n\n"), ParseError);
}

TEST(Parse, ErrorPositions) {
  const std::string header = "recurrence t kind=inhom knot=5_2\n";
  try {
    (void)parse_recurrence(header + "term shift=(0) num= 2*x^1 den= 1\nterm shift=(1) num= 1 den= 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 23u);
    EXPECT_NE(std::string(e.what()).find("unknown variable"), std::string::npos);
  }
  try {
    (void)parse_recurrence(header + "term shift=(0) num= 1 den= q^a\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 30u);
    EXPECT_NE(std::string(e.what()).find("malformed exponent"), std::string::npos);
  }
  EXPECT_THROW((void)parse_recurrence(header + "term shift=(0) num= 1 den= 1\n"), ParseError);
  EXPECT_THROW((void)parse_recurrence(header + "term shift=(0) num= 1 den= 1\nterm shift=(0) num= q den= 1\n"),
               ParseError);
  EXPECT_THROW((void)parse_recurrence("recurrence t kind=other knot=5_2\n"), ParseError);
  EXPECT_THROW((void)parse_recurrence(header + "term shift=(0) num= 1\n"), ParseError);
}

TEST(Parse, LenientTerms) {
  RecurrenceSpec spec = parse_recurrence(
      "recurrence t kind=inhom knot=K_-1  # trailing comment\n"
      "term shift=(0) num= N - 1 den= 1\n"
      "term shift=(1) num= 1 - N den= q^(0)\n");
  EXPECT_EQ(spec.terms[0].coeff, RatFunc(P("N - 1")));
  EXPECT_EQ(jones::knot_name(spec.knot), "K_-1");
}

TEST(KFree, InteriorGridVanishes) {
  RecurrenceSpec spec = fixture("five_two_kfree.rec");
  KFreeReport r = check_kfree(spec, 6, 12, GridMode::Interior);
  EXPECT_GE(r.points, 200);
  EXPECT_TRUE(r.nonzero.empty());
  EXPECT_TRUE(r.ok());
}

TEST(KFree, SmallGridIsEmpty) {
  KFreeReport r = check_kfree(fixture("five_two_kfree.rec"), 1, 5, GridMode::Interior);
  EXPECT_EQ(r.points, 0);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.note.empty());
}

TEST(KFree, FullGridFailsOnlyAtTheCorner) {
  KFreeReport r = check_kfree(fixture("five_two_kfree.rec"), 6, 8, GridMode::Full);
  EXPECT_FALSE(r.nonzero.empty());
  for (const auto& res : r.nonzero) {
    EXPECT_EQ(res.k, 0);
    EXPECT_EQ(res.l, 0);
  }
}

TEST(KFree, EverySignFlipIsDetected) {
  RecurrenceSpec spec = fixture("five_two_kfree.rec");
  for (std::size_t i = 0; i < spec.terms.size(); ++i) {
    RecurrenceSpec mutated = spec;
    mutated.terms[i].coeff = -mutated.terms[i].coeff;
    EXPECT_FALSE(check_kfree(mutated, 6, 8, GridMode::Interior).nonzero.empty()) << i;
  }
}

TEST(Q1, ToySpec) {
  RecurrenceSpec spec = parse_recurrence(
      "recurrence toy kind=inhom knot=K_1\n"
      "term shift=(0) num= N - 1 den= 1\n"
      "term shift=(1) num= 1 - N den= 1\n");
  Q1Result r = specialize_q1(spec);
  ASSERT_TRUE(r.exact);
  EXPECT_EQ(r.poly, P("l - 1") * P("1 - m^2"));
}

TEST(Q1, FiveTwo) {
  Q1Result r = specialize_q1(fixture("five_two_inhom.rec"));
  ASSERT_TRUE(r.exact);
  CompareReport c = compare_with_apoly(r.poly, 2);
  EXPECT_EQ(c.abelian_power, 2);
  EXPECT_EQ(c.factor.max_degree(Var::l) - c.factor.min_degree(Var::l), 3);
  EXPECT_TRUE(c.equal);
  ASSERT_TRUE(c.unit.has_value());
}

TEST(Q1, SixOne) {
  Q1Result r = specialize_q1(fixture("six_one_inhom.rec"));
  ASSERT_TRUE(r.exact);
  CompareReport c = compare_with_apoly(r.poly, -2);
  EXPECT_EQ(c.abelian_power, 1);
  EXPECT_EQ(c.factor.max_degree(Var::l) - c.factor.min_degree(Var::l), 4);
  EXPECT_TRUE(c.equal);
}

TEST(Q1, RawFiveTwoIsInexact) {
  Q1Result r = specialize_q1(fixture("five_two_inhom_raw.rec"));
  EXPECT_FALSE(r.exact);
  EXPECT_FALSE(r.remainder.is_zero());
  EXPECT_TRUE(exactalg::try_divide(r.denominator, P("1 + m^2")).has_value());
}

TEST(Q1, OrderIndependent) {
  for (const char* name : {"five_two_inhom.rec", "six_one_inhom.rec"}) {
    RecurrenceSpec spec = fixture(name);
    const LaurentPoly base = specialize_q1(spec).poly;
    std::vector<std::size_t> idx(spec.terms.size());
    std::iota(idx.begin(), idx.end(), 0);
    int perms = 0;
    do {
      RecurrenceSpec shuffled = spec;
      for (std::size_t i = 0; i < idx.size(); ++i) shuffled.terms[i] = spec.terms[idx[i]];
      EXPECT_EQ(specialize_q1(shuffled).poly, base) << name;
      ++perms;
    } while (std::next_permutation(idx.begin(), idx.end()) && perms < 40);
  }
}

TEST(Q1, EverySignFlipIsDetected) {
  for (auto [name, p] : {std::pair{"five_two_inhom.rec", 2}, std::pair{"six_one_inhom.rec", -2}}) {
    RecurrenceSpec spec = fixture(name);
    for (std::size_t i = 0; i < spec.terms.size(); ++i) {
      RecurrenceSpec mutated = spec;
      mutated.terms[i].coeff = -mutated.terms[i].coeff;
      Q1Result r = specialize_q1(mutated);
      EXPECT_TRUE(!r.exact || !compare_with_apoly(r.poly, p).equal) << name << " " << i;
    }
  }
}

TEST(Compare, RoundTrip) {
  LaurentPoly a2 = apoly::a_polynomial(2).poly;
  CompareReport c = compare_with_apoly(a2 * P("1 + m^2*l").pow(2), 2);
  EXPECT_TRUE(c.equal);
  EXPECT_EQ(c.abelian_power, 2);
  EXPECT_EQ(c.unit->coeff, 1);
}

TEST(Compare, VariantFactorsDifferOnlyAtKnownCoefficients) {
  CompareReport five = compare_factor(variant_five_two_factor(), apoly::a_polynomial(2).poly);
  EXPECT_FALSE(five.equal);
  EXPECT_EQ(l_degrees(five.diff), (std::set<int>{2}));
  EXPECT_FALSE(apoly::is_reciprocal(variant_five_two_factor()));

  CompareReport six = compare_factor(variant_six_one_factor(), apoly::a_polynomial(-2).poly);
  EXPECT_FALSE(six.equal);
  EXPECT_EQ(l_degrees(six.diff), (std::set<int>{1, 3}));
  EXPECT_FALSE(apoly::is_reciprocal(variant_six_one_factor()));
  EXPECT_TRUE(apoly::is_reciprocal(apoly::a_polynomial(-2).poly));
}
