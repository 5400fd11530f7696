#include "dirset/poly_fn.hpp"

#include <random>

#include <gtest/gtest.h>

#include "dirset/directions.hpp"
#include "dirset/error.hpp"
#include "oracle.hpp"

namespace dirset {
namespace {

std::vector<Element> table_of(const FieldContext& f, auto fn) {
  std::vector<Element> t(f.q());
  for (Element x = 0; x < f.q(); ++x) t[x] = fn(x);
  return t;
}

std::vector<Element> padded(std::vector<Element> c, std::uint32_t q) {
  c.resize(q, 0);
  return c;
}

TEST(Interpolate, SpecExamples) {
  const auto f5 = FieldContext::build(5, 1);
  EXPECT_EQ(interpolate(f5, {0, 1, 2, 3, 4}).coefficients(), (std::vector<Element>{0, 1}));
  EXPECT_EQ(interpolate(f5, {3, 3, 3, 3, 3}).coefficients(), (std::vector<Element>{3}));
  const auto sq = interpolate(f5, {0, 1, 4, 4, 1});
  EXPECT_EQ(sq.coefficients(), (std::vector<Element>{0, 0, 1}));
  EXPECT_EQ(sq.degree(), 2u);
}

TEST(Interpolate, LengthMismatch) {
  const auto f5 = FieldContext::build(5, 1);
  try {
    interpolate(f5, {0, 1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LengthMismatch);
  }
}

TEST(Interpolate, AgreesWithTextbookLagrange) {
  std::mt19937 rng(3);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u}) {
    const auto f = FieldContext::build_q(q);
    const oracle::NaiveField ref(f->p(), f->n(), f->modulus());
    std::uniform_int_distribution<Element> pick(0, q - 1);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Element> t(q);
      for (auto& v : t) v = pick(rng);
      EXPECT_EQ(padded(interpolate(f, t).coefficients(), q), ref.lagrange(t));
    }
  }
}

TEST(Interpolate, RoundTripsRandomTables) {
  std::mt19937 rng(11);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto f = FieldContext::build_q(q);
    std::uniform_int_distribution<Element> pick(0, q - 1);
    for (int trial = 0; trial < 10000 / 7; ++trial) {
      std::vector<Element> t(q);
      for (auto& v : t) v = pick(rng);
      const auto fn = interpolate(f, t);
      ASSERT_LT(fn.degree(), q);
      for (Element x = 0; x < q; ++x) ASSERT_EQ(evaluate(fn, x), t[x]);
      ASSERT_EQ(FqFunction::from_coefficients(f, fn.coefficients()).values(), t);
    }
  }
}

TEST(Evaluate, SpecExamples) {
  const auto f5 = FieldContext::build(5, 1);
  const Element sq[] = {0, 0, 1};
  EXPECT_EQ(evaluate(FqFunction::from_coefficients(f5, sq), 3), 4u);
  EXPECT_EQ(evaluate(FqFunction::constant(f5, 2), 4), 2u);
  const auto f9 = FieldContext::build(3, 2);
  const Element cube[] = {0, 0, 0, 1};
  const auto c = FqFunction::from_coefficients(f9, cube);
  const Element g = f9->generator();
  EXPECT_EQ(evaluate(c, g), f9->antilog(3));
  EXPECT_EQ(c(g), 7u);
}

TEST(ReducedDegree, SpecExamples) {
  const auto f7 = FieldContext::build(7, 1);
  const Element lin[] = {0, 1};
  EXPECT_EQ(reduced_degree(FqFunction::from_coefficients(f7, lin)), 1u);
  const auto seventh = interpolate(f7, table_of(*f7, [&](Element x) { return f7->pow(x, 7); }));
  EXPECT_EQ(reduced_degree(seventh), 1u);
  EXPECT_EQ(seventh.coefficients(), (std::vector<Element>{0, 1}));
  const auto f9 = FieldContext::build(3, 2);
  EXPECT_EQ(reduced_degree(interpolate(f9, table_of(*f9, [&](Element x) { return f9->pow(x, 3); }))), 3u);
  EXPECT_EQ(reduced_degree(FqFunction::constant(f9, 5)), 0u);
}

TEST(ReducedDegree, TableScanMatchesInterpolation) {
  std::mt19937 rng(5);
  for (std::uint32_t q : {3u, 4u, 5u, 8u, 9u, 13u}) {
    const auto f = FieldContext::build_q(q);
    std::uniform_int_distribution<Element> pick(0, q - 1);
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<Element> t(q);
      // Mix in low-degree functions so the scan reaches deep coefficients.
      if (trial % 2) {
        std::vector<Element> c(1 + trial % 4);
        for (auto& v : c) v = pick(rng);
        t = FqFunction::from_coefficients(f, c).values();
      } else {
        for (auto& v : t) v = pick(rng);
      }
      EXPECT_EQ(reduced_degree(*f, t), interpolate(f, t).degree());
    }
  }
}

TEST(FromCoefficients, FoldsHighExponents) {
  const auto f5 = FieldContext::build(5, 1);
  const Element x5[] = {0, 0, 0, 0, 0, 1};
  EXPECT_EQ(FqFunction::from_coefficients(f5, x5).coefficients(), (std::vector<Element>{0, 1}));
  const Element x9[] = {0, 0, 0, 0, 0, 0, 0, 0, 0, 1};  // x^9 = x^5 = x
  EXPECT_EQ(FqFunction::from_coefficients(f5, x9).coefficients(), (std::vector<Element>{0, 1}));
}

TEST(MonomialForm, SpecExamples) {
  const auto f9 = FieldContext::build(3, 2);
  const auto cube = interpolate(f9, table_of(*f9, [&](Element x) { return f9->pow(x, 3); }));
  EXPECT_EQ(detect_monomial_form(cube), (MonomialForm{1, 1, 0}));

  const auto f5 = FieldContext::build(5, 1);
  const Element lin[] = {3, 2};
  EXPECT_EQ(detect_monomial_form(FqFunction::from_coefficients(f5, lin)), (MonomialForm{2, 0, 3}));
  const Element sq[] = {0, 0, 1};
  EXPECT_FALSE(detect_monomial_form(FqFunction::from_coefficients(f5, sq)).has_value());
  EXPECT_EQ(detect_monomial_form(FqFunction::constant(f9, 7)), (MonomialForm{0, 0, 7}));
}

TEST(MonomialForm, RecoversEveryForm) {
  for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u}) {
    const auto f = FieldContext::build_q(q);
    for (Element a = 1; a < q; ++a)
      for (std::uint32_t k = 0; k < f->n(); ++k)
        for (Element b = 0; b < q; b += 3) {
          const auto fn = FqFunction::monomial(f, a, k, b);
          const auto form = detect_monomial_form(fn);
          ASSERT_TRUE(form.has_value());
          EXPECT_EQ(*form, (MonomialForm{a, k, b}));
          EXPECT_EQ(FqFunction::monomial(f, form->a, form->k, form->b), fn);
        }
  }
}

TEST(Additive, SpecExamples) {
  const auto f9 = FieldContext::build(3, 2);
  const auto cube = interpolate(f9, table_of(*f9, [&](Element x) { return f9->pow(x, 3); }));
  EXPECT_TRUE(is_additive(cube));
  const auto f5 = FieldContext::build(5, 1);
  const Element sq[] = {0, 0, 1};
  EXPECT_FALSE(is_additive(FqFunction::from_coefficients(f5, sq)));
  for (Element c = 0; c < 5; ++c) {
    const Element lin[] = {c, 1};
    const auto fn = FqFunction::from_coefficients(f5, lin);
    EXPECT_TRUE(is_affine(fn));
    EXPECT_EQ(is_additive(fn), c == 0);
  }
}

// The two additivity tests are run inside is_additive; a disagreement would throw.
TEST(Additive, BothTestsAgreeOnAllSmallFunctions) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto f = FieldContext::build_q(q);
    std::vector<Element> t(q, 0);
    std::size_t additive = 0;
    while (true) {
      additive += is_additive(interpolate(f, t)) ? 1 : 0;
      std::size_t i = 0;
      while (i < q && ++t[i] == q) t[i++] = 0;
      if (i == q) break;
    }
    // Additive maps are F_p-linear: q^n of them.
    std::size_t expected = 1;
    for (std::uint32_t i = 0; i < f->n(); ++i) expected *= q;
    EXPECT_EQ(additive, expected) << q;
  }
}

TEST(Additive, AgreementOnSampledFunctionsAndLinearizedPolynomials) {
  std::mt19937 rng(17);
  for (std::uint32_t q : {8u, 9u, 16u, 27u}) {
    const auto f = FieldContext::build_q(q);
    std::uniform_int_distribution<Element> pick(0, q - 1);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Element> c(q, 0);
      for (std::uint32_t i = 0, pk = 1; i < f->n(); ++i, pk *= f->p()) c[pk] = pick(rng);
      if (trial % 3 == 0) c[pick(rng)] = pick(rng);
      EXPECT_NO_THROW(is_additive(FqFunction::from_coefficients(f, c)));
    }
  }
}

TEST(Additive, DirectionsOfAffineMapsAreRatios) {
  for (std::uint32_t q : {4u, 8u, 9u, 16u}) {
    const auto f = FieldContext::build_q(q);
    std::mt19937 rng(q);
    std::uniform_int_distribution<Element> pick(0, q - 1);
    std::vector<Element> c(q, 0);
    for (std::uint32_t i = 0, pk = 1; i < f->n(); ++i, pk *= f->p()) c[pk] = pick(rng);
    const auto additive = FqFunction::from_coefficients(f, c);
    ASSERT_TRUE(is_additive(additive));
    ElementSet ratios(q);
    for (Element x = 1; x < q; ++x) ratios.insert(f->div(additive(x), x));
    for (Element alpha = 0; alpha < q; ++alpha) {
      c[0] = alpha;
      EXPECT_EQ(direction_set(FqFunction::from_coefficients(f, c)).set(), ratios);
    }
  }
}

}  // namespace
}  // namespace dirset
