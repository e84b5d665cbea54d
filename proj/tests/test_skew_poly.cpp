#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "skewring/corpus.hpp"
#include "skewring/skew_poly.hpp"

using namespace skewring;

namespace {

Index label(const FiniteRing& R, const char* text) {
  const auto found = R.find_label(text);
  EXPECT_TRUE(found) << text;
  return found.value_or(0);
}

std::vector<Index> random_coeffs(std::mt19937_64& rng, const FiniteRing& R, std::size_t len) {
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(R.size() - 1));
  std::vector<Index> out(len);
  for (auto& c : out) c = pick(rng);
  return out;
}

}  // namespace

TEST(SkewPoly, MonomialLawOnExampleOne) {
  const SkewPolyRing ctx(build_example1());
  const auto& R = ctx.ring();
  const Index e10 = label(R, "(1,0)"), e01 = label(R, "(0,1)");
  const auto p = ctx.monomial(e10, 1);
  const auto q = ctx.monomial(e10, 0);
  // (1,0) x * (1,0) = (1,0) swap(1,0) x = (1,0)(0,1) x = 0
  EXPECT_TRUE(ctx.mul(p, q).is_zero());
  EXPECT_EQ(ctx.mul(q, p), ctx.monomial(e10, 1));
  // x a = alpha(a) x
  const auto x = ctx.monomial(*R.one(), 1);
  EXPECT_EQ(ctx.mul(x, ctx.monomial(e10, 0)), ctx.monomial(e01, 1));
  // x^2 a = a x^2 for the swap (period 2)
  const auto x2 = ctx.monomial(*R.one(), 2);
  EXPECT_EQ(ctx.mul(x2, ctx.monomial(e10, 0)), ctx.monomial(e10, 2));
}

TEST(SkewPoly, ExampleTwoWitnessProductVanishes) {
  const SkewPolyRing ctx(build_example2_quotient());
  const auto p = ctx.parse_poly("(2,0) + (2,1)*x");
  EXPECT_TRUE(ctx.mul(p, p).is_zero());
  const auto& R = ctx.ring();
  for (Index r = 0; r < R.size(); ++r) {
    for (std::size_t k = 0; k < 4; ++k) EXPECT_TRUE(ctx.sandwich(p, r, k, p).is_zero()) << r << " " << k;
  }
}

TEST(SkewPoly, NormalizationDropsTopZeros) {
  const SkewPolyRing ctx(build_example1());
  const auto p = ctx.poly({1, 0, 0});
  EXPECT_EQ(p.coeffs().size(), 1u);
  EXPECT_EQ(p.degree(), std::optional<std::size_t>(0));
  EXPECT_TRUE(ctx.poly({0, 0}).is_zero());
  EXPECT_EQ(ctx.poly({0, 0}), ctx.zero());
  EXPECT_FALSE(ctx.zero().degree());
}

TEST(SkewPoly, AddNegSub) {
  const SkewPolyRing ctx(build_example2_quotient());
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = ctx.poly(random_coeffs(rng, ctx.ring(), 3));
    const auto q = ctx.poly(random_coeffs(rng, ctx.ring(), 2));
    EXPECT_TRUE(ctx.sub(p, p).is_zero());
    EXPECT_EQ(ctx.add(p, q), ctx.add(q, p));
    EXPECT_EQ(ctx.sub(ctx.add(p, q), q), p);
  }
}

TEST(SkewPoly, RandomizedRingLaws) {
  for (const auto& alpha : {build_example2_quotient(), build_example4(3), build_example5(3).first}) {
    const SkewPolyRing ctx(alpha);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
      const auto a = ctx.poly(random_coeffs(rng, ctx.ring(), 3));
      const auto b = ctx.poly(random_coeffs(rng, ctx.ring(), 3));
      const auto c = ctx.poly(random_coeffs(rng, ctx.ring(), 2));
      EXPECT_EQ(ctx.mul(ctx.mul(a, b), c), ctx.mul(a, ctx.mul(b, c)));
      EXPECT_EQ(ctx.mul(a, ctx.add(b, c)), ctx.add(ctx.mul(a, b), ctx.mul(a, c)));
      EXPECT_EQ(ctx.mul(ctx.add(a, b), c), ctx.add(ctx.mul(a, c), ctx.mul(b, c)));
    }
  }
}

TEST(SkewPoly, SandwichIsTripleProduct) {
  const SkewPolyRing ctx(build_example4(3));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = ctx.poly(random_coeffs(rng, ctx.ring(), 2));
    const auto q = ctx.poly(random_coeffs(rng, ctx.ring(), 2));
    const Index r = random_coeffs(rng, ctx.ring(), 1)[0];
    const std::size_t k = trial % 3;
    EXPECT_EQ(ctx.sandwich(p, r, k, q), ctx.mul(ctx.mul(p, ctx.monomial(r, k)), q));
  }
}

TEST(SkewPoly, IdentityMapGivesOrdinaryConvolution) {
  const auto alpha = identity_endomorphism(build_example4(3).ring());
  const SkewPolyRing ctx(alpha);
  const auto& R = ctx.ring();
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_coeffs(rng, R, 3), b = random_coeffs(rng, R, 3);
    std::vector<Index> conv(5, R.zero());
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) conv[i + j] = R.add(conv[i + j], R.mul(a[i], b[j]));
    }
    EXPECT_EQ(ctx.mul(ctx.poly(a), ctx.poly(b)), ctx.poly(conv));
  }
}

TEST(SkewPoly, ValuesFromAnotherContextAreRejected) {
  const SkewPolyRing a(build_example1()), b(build_example1());
  const auto p = a.monomial(1, 1);
  try {
    b.mul(p, p);
    FAIL() << "expected a mismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Mismatch);
  }
  EXPECT_THROW(a.poly({7}), Error);
}

TEST(LaurentPoly, InverseOfX) {
  const SkewPolyRing ctx(build_example2_quotient());
  const auto& R = ctx.ring();
  const Index one = *R.one();
  const auto x = ctx.laurent_monomial(one, 1), xinv = ctx.laurent_monomial(one, -1);
  EXPECT_EQ(ctx.laurent_mul(x, xinv), ctx.laurent_monomial(one, 0));
  EXPECT_EQ(ctx.laurent_mul(xinv, x), ctx.laurent_monomial(one, 0));
  // x^-1 a x = alpha^-1(a)
  const Index a = label(R, "(1,1)");
  const auto conj = ctx.laurent_mul(ctx.laurent_mul(xinv, ctx.laurent_monomial(a, 0)), x);
  EXPECT_EQ(conj, ctx.laurent_monomial(label(R, "(1,3)"), 0));
  EXPECT_EQ(ctx.to_poly(ctx.laurent_mul(x, x)), ctx.monomial(one, 2));
  EXPECT_FALSE(ctx.to_poly(xinv));
}

TEST(LaurentPoly, AgreesWithPlainProductAfterShift) {
  const SkewPolyRing ctx(build_example1());
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_coeffs(rng, ctx.ring(), 3), b = random_coeffs(rng, ctx.ring(), 3);
    const auto P = ctx.laurent(-1, a), Q = ctx.laurent(-1, b);
    // x P and Q x are ordinary polynomials; (xP)(Qx) = x (PQ) x.
    const auto one = *ctx.ring().one();
    const auto xP = *ctx.to_poly(ctx.laurent_mul(ctx.laurent_monomial(one, 1), P));
    const auto Qx = *ctx.to_poly(ctx.laurent_mul(Q, ctx.laurent_monomial(one, 1)));
    const auto lhs = ctx.laurent(ctx.mul(xP, Qx));
    const auto rhs = ctx.laurent_mul(ctx.laurent_mul(ctx.laurent_monomial(one, 1), ctx.laurent_mul(P, Q)),
                                     ctx.laurent_monomial(one, 1));
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(LaurentPoly, NeedsAutomorphism) {
  const SkewPolyRing ctx(zero_endomorphism(make_zmod(4)));
  EXPECT_THROW(ctx.laurent_monomial(1, -1), Error);
}

TEST(Series, TruncatedProductMatchesPolynomialProduct) {
  const SkewPolyRing ctx(build_example5(3).first);
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = ctx.poly(random_coeffs(rng, ctx.ring(), 4));
    const auto q = ctx.poly(random_coeffs(rng, ctx.ring(), 4));
    for (std::int64_t N : {1, 2, 3}) {
      EXPECT_EQ(ctx.truncated_mul(ctx.series(p, N), ctx.series(q, N)), ctx.series(ctx.mul(p, q), N));
    }
  }
}

TEST(Series, LaurentTruncationOrder) {
  const SkewPolyRing ctx(build_example1());
  const auto& R = ctx.ring();
  const auto p = ctx.series(-1, 2, {1, 2, 3});
  const auto q = ctx.series(-1, 3, {3, 1, 2, 1});
  const auto pq = ctx.truncated_mul(p, q);
  // exact below min(2 + (-1), 3 + (-1)) = 1
  EXPECT_EQ(pq.min_exp(), -2);
  EXPECT_EQ(pq.order(), 1);
  const auto exact = ctx.laurent_mul(ctx.laurent(-1, {1, 2, 3}), ctx.laurent(-1, {3, 1, 2, 1}));
  for (std::int64_t e = -2; e < 1; ++e) {
    const Index want = e >= exact.min_exp() ? exact.coeffs()[static_cast<std::size_t>(e - exact.min_exp())] : R.zero();
    EXPECT_EQ(pq.coeff_at(e), want) << e;
  }
}

TEST(Text, RenderAndParse) {
  const SkewPolyRing ctx(build_example2_quotient());
  const auto& R = ctx.ring();
  const auto p = ctx.poly({label(R, "(2,0)"), label(R, "(2,1)")});
  EXPECT_EQ(ctx.render(p), "(2,0) + (2,1)*x");
  EXPECT_EQ(ctx.parse_poly("(2,0) + (2,1)*x"), p);
  EXPECT_EQ(ctx.render(ctx.zero()), "(0,0)");
  EXPECT_EQ(ctx.render(ctx.monomial(label(R, "(1,3)"), 3)), "(1,3)*x^3");
  const auto L = ctx.laurent(-2, {label(R, "(0,1)"), R.zero(), label(R, "(3,3)")});
  EXPECT_EQ(ctx.render(L), "(0,1)*x^-2 + (3,3)");
  EXPECT_EQ(ctx.parse_laurent("(0,1)*x^-2 + (3,3)"), L);
  EXPECT_EQ(ctx.render(ctx.series(p, 3)), "(2,0) + (2,1)*x + O(x^3)");
  // repeated exponents add up
  EXPECT_EQ(ctx.parse_poly("(1,0)*x + (1,0)*x"), ctx.monomial(label(R, "(2,0)"), 1));
}

TEST(Text, ParseErrors) {
  const SkewPolyRing ctx(build_example2_quotient());
  for (const char* bad : {"", "(9,9)", "(1,0)*y", "(1,0)*x^a", "(1,0)*x^-1"}) {
    try {
      ctx.parse_poly(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Parse) << bad;
    }
  }
}
