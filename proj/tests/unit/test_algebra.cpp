#include <gtest/gtest.h>

#include "contactlie/suite.hpp"
#include "helpers.hpp"

using namespace contactlie;
using namespace testing_helpers;

namespace {

AlgebraElement jacobi(const AlgebraElement& u, const AlgebraElement& v, const AlgebraElement& w) {
  return bracket_closed(bracket_closed(u, v), w) + bracket_closed(bracket_closed(v, w), u) +
         bracket_closed(bracket_closed(w, u), v);
}

}  // namespace

TEST(Element, ArithmeticAndDroppedTerms) {
  auto c = single_block(1, J0Mode::kZero);
  AlgebraElement u = el(c, "2*x[0,1,0] - x[1,0,0]");
  EXPECT_EQ(u.size(), 2u);
  EXPECT_TRUE((u - u).is_zero());
  EXPECT_EQ(Rational(3) * u, u + u + u);
  // t_1 and t_1b are forbidden in block 1, and t_0 is forbidden when J0 = {0}.
  AlgebraElement w(c);
  w.add_term(BasisIndex{c->gamma().zero(), c->unit_exponents(1)}, 5);
  w.add_term(BasisIndex{c->gamma().zero(), c->unit_exponents(2)}, 5);
  w.add_term(BasisIndex{c->gamma().zero(), c->unit_exponents(0)}, 5);
  EXPECT_TRUE(w.is_zero());
  auto c3 = single_block(3, J0Mode::kZero);
  AlgebraElement w3(c3);
  w3.add_term(BasisIndex{c3->gamma().zero(), c3->unit_exponents(1)}, 5);
  EXPECT_EQ(w3.size(), 1u);
}

TEST(Element, MultiplyIsCommutativeWithUnit) {
  for (const auto& text : standard_config_texts()) {
    auto c = config(text);
    Sampler s(c, 11);
    for (int k = 0; k < 30; ++k) {
      AlgebraElement u = s.element(3), v = s.element(3), w = s.element(2);
      EXPECT_EQ(multiply(u, v), multiply(v, u));
      EXPECT_EQ(multiply(multiply(u, v), w), multiply(u, multiply(v, w)));
      EXPECT_EQ(multiply(AlgebraElement::one(c), u), u);
    }
  }
}

TEST(Element, MismatchedConfigsRejected) {
  auto a = single_block(1, J0Mode::kZero);
  auto b = single_block(3, J0Mode::kZero);
  EXPECT_THROW(bracket_closed(AlgebraElement::one(a), AlgebraElement::one(b)), std::invalid_argument);
}

TEST(Operators, GradingAndDownGradingAreDerivationsOfTheProduct) {
  for (const auto& text : standard_config_texts()) {
    auto c = config(text);
    Sampler s(c, 5);
    for (int k = 0; k < 20; ++k) {
      AlgebraElement u = s.element(3), v = s.element(3);
      for (Index p = 0; p < c->dim(); ++p) {
        EXPECT_EQ(partial_star(p, multiply(u, v)),
                  multiply(partial_star(p, u), v) + multiply(u, partial_star(p, v)));
        EXPECT_EQ(partial_t(p, multiply(u, v)), multiply(partial_t(p, u), v) + multiply(u, partial_t(p, v)));
      }
    }
  }
}

TEST(Operators, DegreeOperatorHasEigenvalueTheta) {
  for (const auto& text : standard_config_texts()) {
    auto c = config(text);
    Sampler s(c, 9);
    for (int k = 0; k < 50; ++k) {
      BasisIndex b = s.basis();
      AlgebraElement x = AlgebraElement::basis(c, b);
      EXPECT_EQ(big_partial(x), theta(*c, b.alpha, b.exps) * x);
    }
  }
}

TEST(Bracket, HandComputedValues) {
  auto c = single_block(1, J0Mode::kZero);
  // Block 1: x^{sigma}(d_1 u d_1b v - d_1b u d_1 v) with (2 - D) u = 0 for u = x[0,1,1].
  EXPECT_EQ(bracket_closed(el(c, "x[0,1,1]"), el(c, "x[1,3,1]")), el(c, "-2*x[1,3,1]"));
  EXPECT_EQ(bracket_closed(el(c, "x[0,2,0]"), el(c, "x[0,0,2]")), el(c, "4*x[0,1,1]"));

  auto n = single_block(1, J0Mode::kNaturals);
  EXPECT_EQ(bracket_closed(el(n, "x[0,0,0]"), el(n, "x[2,1,0]t[3,0,0]")),
            el(n, "4*x[2,1,0]t[3,0,0] + 6*x[2,1,0]t[2,0,0]"));

  auto t = single_block(6, J0Mode::kZero);
  EXPECT_EQ(bracket_closed(el(t, "x[0,0,0]t[0,1,1]"), el(t, "x[1,0,0]t[0,2,5]")), el(t, "3*x[1,0,0]t[0,2,5]"));
}

TEST(Bracket, UnitActsAsTwiceTheZeroDerivative) {
  for (const auto& text : standard_config_texts()) {
    auto c = config(text);
    if (c->j0() != J0Mode::kNaturals) continue;
    Sampler s(c, 17);
    for (int k = 0; k < 50; ++k) {
      AlgebraElement v = s.element(3);
      EXPECT_EQ(bracket_closed(AlgebraElement::one(c), v), Rational(2) * partial_full(0, v));
    }
  }
}

TEST(Bracket, ClosedFormMatchesOperatorDefinition) {
  for (const auto& text : standard_config_texts()) {
    auto c = config(text);
    Sampler s(c, 23);
    for (int k = 0; k < 200; ++k) {
      AlgebraElement u = s.element(3), v = s.element(3);
      ASSERT_EQ(bracket_closed(u, v), bracket_operator(u, v))
          << text << "u=" << format_element(u) << " v=" << format_element(v);
    }
  }
}

TEST(Bracket, AntisymmetricAndJacobi) {
  for (const auto& text : standard_config_texts()) {
    auto c = config(text);
    Sampler s(c, 31);
    for (int k = 0; k < 60; ++k) {
      AlgebraElement u = s.element(2), v = s.element(2), w = s.element(2);
      EXPECT_TRUE((bracket_closed(u, v) + bracket_closed(v, u)).is_zero());
      ASSERT_TRUE(jacobi(u, v, w).is_zero())
          << text << format_element(u) << " | " << format_element(v) << " | " << format_element(w);
    }
  }
}

TEST(Bracket, EigenRelationsOnBlockSix) {
  auto c = config(standard_config_texts().back());
  Sampler s(c, 3);
  std::vector<BasisIndex> labels;
  for (int k = 0; k < 100; ++k) labels.push_back(s.basis());
  PropertyResult r = check_eigen_relations(c, labels);
  EXPECT_EQ(r.failed, 0u) << r.witness;
  EXPECT_GE(r.checked, 100u);
  EXPECT_FALSE(r.skipped);

  auto none = single_block(1, J0Mode::kZero);
  EXPECT_TRUE(check_eigen_relations(none, {}).skipped);
}

TEST(Bracket, EigenRelationsThroughOperatorDefinition) {
  auto c = single_block(6, J0Mode::kNaturals);
  Sampler s(c, 8);
  const AlgebraElement pair = el(c, "x[0,0,0]t[0,1,1]"), p2 = el(c, "x[0,0,0]t[0,2,0]"),
                           q2 = el(c, "x[0,0,0]t[0,0,2]");
  for (int k = 0; k < 100; ++k) {
    BasisIndex b = s.basis();
    AlgebraElement x = AlgebraElement::basis(c, b);
    const long ip = static_cast<long>(b.exps[1]), iq = static_cast<long>(b.exps[2]);
    EXPECT_EQ(bracket_operator(pair, x), Rational(iq - ip) * x);
    EXPECT_EQ(bracket_operator(q2, bracket_operator(p2, x)), Rational(-4 * (ip + 1) * iq) * x);
  }
}
