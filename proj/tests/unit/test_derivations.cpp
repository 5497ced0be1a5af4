#include <gtest/gtest.h>

#include "contactlie/derivations.hpp"
#include "helpers.hpp"

using namespace contactlie;
using namespace testing_helpers;

namespace {

bool agree_on(const LinearOperator& a, const LinearOperator& b, const std::vector<BasisIndex>& labels) {
  for (const auto& w : labels)
    if (!(a(w) == b(w))) return false;
  return true;
}

HomGamma random_hom(const ConfigPtr& c, const std::vector<Vector>& basis, Sampler& s) {
  Vector v(c->gamma().rank());
  for (const auto& b : basis) {
    const Rational k = s.rational();
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += k * b[j];
  }
  return HomGamma(c, v);
}

}  // namespace

TEST(Derivations, StandardFamiliesSatisfyLeibniz) {
  for (const auto& text : standard_config_texts()) {
    auto c = config(text);
    Sampler s(c, 41);
    const auto pairs = random_pairs(c, 42, 80);
    const auto prime = hom_prime_basis(*c);
    for (int k = 0; k < 3; ++k) EXPECT_TRUE(check_derivation(d_mu(random_hom(c, prime, s)), pairs).ok()) << text;
    for (Index p : outer_indices(*c)) EXPECT_TRUE(check_derivation(outer_partial_t(c, p), pairs).ok()) << text;
    EXPECT_TRUE(check_derivation(ad(s.element(3)), pairs).ok()) << text;
  }
}

TEST(Derivations, GradingOperatorIsNotADerivationInBlockOne) {
  auto c = single_block(1, J0Mode::kZero);
  auto report = check_derivation(grading_operator(c, 1), random_pairs(c, 3, 200));
  EXPECT_GT(report.failed, 0u);
  ASSERT_FALSE(report.failures.empty());
  EXPECT_FALSE(report.failures[0].lhs == report.failures[0].rhs);
}

TEST(Derivations, HomValidation) {
  auto c = single_block(1, J0Mode::kZero);
  // sigma_1 = (0,-1,-1) must be killed.
  EXPECT_THROW(HomGamma(c, Vector{0, 1, 0}), std::invalid_argument);
  EXPECT_NO_THROW(HomGamma(c, Vector{0, 1, -1}));
  EXPECT_THROW(HomGamma(c, Vector{0, 1}), std::invalid_argument);
  EXPECT_THROW(outer_partial_t(c, 1), std::invalid_argument);
}

TEST(Derivations, HomSpaces) {
  auto z = single_block(2, J0Mode::kZero);
  auto n = single_block(2, J0Mode::kNaturals);
  EXPECT_EQ(hom_prime_basis(*z).size(), 2u);
  // ZERO mode: mu_0 and mu_1 exhaust the sigma-vanishing homs.
  EXPECT_TRUE(hom_star_basis(*z).empty());
  const auto star = hom_star_basis(*n);
  ASSERT_EQ(star.size(), 1u);
  EXPECT_EQ(star[0], (Vector{1, 0, 0}));
  EXPECT_EQ(hom_mu_values(*n, 1), (Vector{0, -1, 1}));
  EXPECT_EQ(hom_mu_values(*n, 0), (Vector{1, 0, 0}));
}

TEST(Derivations, OuterIndices) {
  auto c = config(standard_config_texts().back());
  // Indices 1..6 then bars 7..12: bar I2 = 8, I3 = 3, bar I3 = 9, I5 = 5.
  EXPECT_EQ(outer_indices(*c), (std::vector<Index>{3, 5, 8, 9}));
}

TEST(SigmaIdentity, WorkedValue) {
  auto c = single_block(1, J0Mode::kZero);
  AlgebraElement x = el(c, "x[0,2,1]");
  AlgebraElement d = d_mu(HomGamma(c, hom_mu_values(*c, 1)))(x);
  EXPECT_EQ(d, -x);
  EXPECT_EQ(bracket_closed(el(c, "x[0,1,1]"), x), -x);
}

TEST(SigmaIdentity, HoldsOnWindows) {
  for (const auto& text : standard_config_texts()) {
    auto c = config(text);
    std::vector<BasisIndex> window;
    if (c->shape().rank() <= 2) {
      window = enumerate_window(*c, 2);
    } else {
      // The full window is far too large here; sample instead.
      Sampler s(c, 15);
      for (int k = 0; k < 300; ++k) window.push_back(s.basis());
    }
    for (Index p : c->shape().blocks(1, 3)) {
      auto r = check_sigma_identity(c, p, window);
      EXPECT_TRUE(r.ok()) << text << " p=" << p;
      EXPECT_EQ(r.checked, window.size());
    }
    for (Index p : c->shape().blocks(4, 6)) EXPECT_THROW(check_sigma_identity(c, p, window), std::invalid_argument);
  }
}

TEST(ProbeSets, FullShapeContents) {
  auto c = config(standard_config_texts().back());
  auto sets = probe_sets(c);
  ASSERT_EQ(sets.a1.size(), 4u);
  EXPECT_EQ(sets.a1[0], el(c, "x[0,0,0,1,1,0,0,0,0,0,0,0,0]"));
  EXPECT_EQ(sets.a1[2], el(c, "x[0,0,0,0,0,0,0,0,0,1,0,0,0]t[0,0,0,0,0,0,0,0,0,0,1,0,0]"));
  EXPECT_EQ(sets.a1[3], AlgebraElement::one(c));
  ASSERT_EQ(sets.a2.size(), 3u);
  EXPECT_EQ(sets.a2[2], el(c, "x[0,0,0,0,0,0,0,0,0,0,0,0,0]t[0,0,0,0,0,0,0,0,0,0,0,1,1]"));
  EXPECT_EQ(sets.a3.size(), 7u);
  EXPECT_EQ(sets.a4.size(), 7u);
  EXPECT_EQ(sets.a4.back(), el(c, "x[-2,0,0,0,0,0,0,0,0,0,0,0,0]"));
}

TEST(ProbeSets, SemisimpleAndLocallyFinite) {
  for (const auto& text : standard_config_texts()) {
    auto c = config(text);
    auto sets = probe_sets(c);
    Sampler s(c, 77);
    for (int k = 0; k < 30; ++k) {
      BasisIndex b = s.basis();
      AlgebraElement x = AlgebraElement::basis(c, b);
      for (const auto& h : sets.a2) {
        AlgebraElement y = bracket_closed(h, x);
        EXPECT_TRUE(y.is_zero() || (y.size() == 1 && y.terms().begin()->first == b)) << text;
      }
      // Iterates keep the group label and never raise exponents.
      for (const auto& a : sets.a1) {
        AlgebraElement y = x;
        for (int it = 0; it < 6 && !y.is_zero(); ++it) {
          y = bracket_closed(a, y);
          for (const auto& [label, coeff] : y.terms()) {
            EXPECT_EQ(label.alpha, b.alpha) << text;
            for (Index p = 0; p < c->dim(); ++p) EXPECT_LE(label.exps[p], b.exps[p]) << text;
          }
        }
      }
    }
  }
}

TEST(Decomposer, InnerMultiple) {
  auto c = single_block(1, J0Mode::kZero);
  auto dec = decompose_derivation(3 * ad(el(c, "x[0,1,0]")), enumerate_window(*c, 2), enumerate_window(*c, 1));
  EXPECT_TRUE(dec.residual_zero);
  EXPECT_EQ(dec.inner, el(c, "3*x[0,1,0]"));
  EXPECT_EQ(dec.mu, HomGamma::zero(c));
  for (const auto& [p, v] : dec.c) EXPECT_EQ(v, 0);
}

TEST(Decomposer, OuterAndHomParts) {
  auto c = single_block(2, J0Mode::kNaturals);
  LinearOperator d = d_mu(HomGamma(c, Vector{1, 0, 0})) + outer_partial_t(c, 2);
  auto window = enumerate_window(*c, 2);
  auto dec = decompose_derivation(d, window, enumerate_window(*c, 1));
  EXPECT_EQ(dec.mu.values(), (Vector{1, 0, 0}));
  EXPECT_EQ(dec.c.at(2), Rational(1));
  EXPECT_TRUE(dec.inner.is_zero());
  EXPECT_TRUE(agree_on(dec.reconstruct(), d, window));
}

TEST(Decomposer, RandomCombinationsRecovered) {
  for (const auto& text : standard_config_texts()) {
    auto c = config(text);
    if (c->shape().rank() > 2) continue;  // keeps the window small
    const auto window = enumerate_window(*c, 2);
    const auto support = enumerate_window(*c, 1);
    DerivationDecomposer dec(c, window, support);
    const auto star = hom_star_basis(*c);
    Sampler s(c, 91);
    for (int trial = 0; trial < 3; ++trial) {
      AlgebraElement w(c);
      for (int k = 0; k < 4; ++k) w.add_term(support[static_cast<std::size_t>(s.integer(0, support.size() - 1))], s.rational());
      LinearOperator d = ad(w) + d_mu(random_hom(c, star, s));
      std::map<Index, Rational> c_true;
      for (Index p : outer_indices(*c)) {
        c_true[p] = s.rational();
        d = d + c_true[p] * outer_partial_t(c, p);
      }
      auto out = dec.decompose(d);
      EXPECT_TRUE(out.residual_zero);
      EXPECT_EQ(out.inner, w) << text;
      for (Index p : outer_indices(*c)) EXPECT_EQ(out.c.at(p), c_true[p]) << text;
      EXPECT_TRUE(agree_on(out.reconstruct(), d, window));
    }
  }
}

TEST(Decomposer, ResidualWitnessOutsideSupport) {
  auto c = single_block(1, J0Mode::kZero);
  try {
    decompose_derivation(ad(el(c, "x[0,3,0]")), enumerate_window(*c, 2), enumerate_window(*c, 1));
    FAIL();
  } catch (const ResidualError& e) {
    EXPECT_FALSE(e.witness().empty());
  }
  EXPECT_THROW(decompose_derivation(grading_operator(c, 1), enumerate_window(*c, 2), enumerate_window(*c, 1)),
               ResidualError);
}

TEST(Decomposer, TinyWindowIsAmbiguous) {
  auto c = single_block(1, J0Mode::kZero);
  try {
    DerivationDecomposer(c, enumerate_window(*c, 0), enumerate_window(*c, 1));
    FAIL();
  } catch (const AmbiguousError& e) {
    EXPECT_LT(e.rank(), e.unknowns());
  }
}

TEST(OperatorText, ParsesCombinations) {
  auto c = single_block(2, J0Mode::kNaturals);
  const auto window = enumerate_window(*c, 2);
  LinearOperator expected = Rational(3) * ad(el(c, "x[0,1,0]")) - outer_partial_t(c, 2) +
                            Rational(1, 2) * d_mu(HomGamma(c, Vector{1, 0, 0}));
  EXPECT_TRUE(agree_on(parse_operator_spec(c, "3*ad(x[0,1,0]) - dt(1b) + 1/2*dmu(1,0,0)"), expected, window));
  EXPECT_TRUE(agree_on(parse_operator_spec(c, "-ad(x[0,1,0] - x[1,0,0])"),
                       ad(el(c, "x[1,0,0] - x[0,1,0]")), window));
  EXPECT_TRUE(agree_on(parse_operator_spec(c, "dstar(1)"), grading_operator(c, 1), window));
  EXPECT_THROW(parse_operator_spec(c, ""), ParseError);
  EXPECT_THROW(parse_operator_spec(c, "ad(x[0,1,0]"), ParseError);
  EXPECT_THROW(parse_operator_spec(c, "ad(x[0,1,0]) +"), ParseError);
  EXPECT_THROW(parse_operator_spec(c, "q*ad(x[0,1,0])"), ParseError);
}
