#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "skewring/ring.hpp"

using namespace skewring;

namespace {

template <class F>
ErrorKind error_kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::Io;
}

// Index of a pair element in a product / trivial extension.
Index pair_index(const FiniteRing& R, Index a, Index b) {
  return a * static_cast<Index>(R.pair_shape()->second_size) + b;
}

}  // namespace

TEST(Zmod, TablesMatchModularArithmetic) {
  const auto Z6 = make_zmod(6);
  EXPECT_EQ(Z6.size(), 6u);
  EXPECT_EQ(Z6.label(), "Z6");
  EXPECT_EQ(Z6.zero(), 0u);
  EXPECT_EQ(Z6.one(), std::optional<Index>(1));
  EXPECT_EQ(Z6.add(4, 5), 3u);
  EXPECT_EQ(Z6.mul(4, 5), 2u);
  EXPECT_EQ(Z6.neg(2), 4u);
  EXPECT_EQ(Z6.sub(1, 3), 4u);
}

TEST(Zmod, SizeCapIsEnforcedAndAdjustable) {
  EXPECT_EQ(error_kind_of([] { make_zmod(257); }), ErrorKind::SizeCap);
  EXPECT_EQ(make_zmod(300, RingLimits{512}).size(), 300u);
  EXPECT_EQ(error_kind_of([] { make_zmod(0); }), ErrorKind::InvalidArgument);
}

TEST(TableRing, RejectsNonAssociativeMultiplication) {
  // F2^2 with e1 e1 = e2, e2 e1 = e1 and all other basis products zero.
  const std::vector<Index> add = {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0};
  const std::vector<Index> mul = {0, 0, 0, 0, 0, 2, 0, 2, 0, 1, 0, 1, 0, 3, 0, 3};
  try {
    make_table_ring(add, mul, {"0", "e1", "e2", "e1+e2"}, "NonAssoc");
    FAIL() << "expected an axiom violation";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AxiomViolation);
    EXPECT_NE(std::string(e.what()).find("(e1, e1, e1)"), std::string::npos) << e.what();
  }
}

TEST(TableRing, RejectsNonDistributiveMultiplication) {
  // Z2 with 1 * 1 = 1 and 0 * 0 = 1 breaks a * 0 = 0.
  EXPECT_EQ(error_kind_of([] { make_table_ring({0, 1, 1, 0}, {1, 0, 0, 1}, {"0", "1"}); }),
            ErrorKind::AxiomViolation);
}

TEST(TableRing, RejectsDuplicateLabels) {
  EXPECT_EQ(error_kind_of([] { make_table_ring({0, 1, 1, 0}, {0, 0, 0, 1}, {"a", "a"}); }),
            ErrorKind::InvalidArgument);
}

TEST(TableRing, NonUnitalRingHasNoOne) {
  // Z2 with zero multiplication.
  const auto R = make_table_ring({0, 1, 1, 0}, {0, 0, 0, 0}, {"0", "1"});
  EXPECT_FALSE(R.is_unital());
}

TEST(DirectProduct, PairLabelsAndComponentwiseOperations) {
  const auto Z2 = make_zmod(2);
  const auto R = make_direct_product(Z2, Z2);
  ASSERT_EQ(R.size(), 4u);
  EXPECT_EQ(R.label(), "Z2+Z2");
  const Index e01 = pair_index(R, 0, 1), e10 = pair_index(R, 1, 0), e11 = pair_index(R, 1, 1);
  EXPECT_EQ(R.element_label(e01), "(0,1)");
  EXPECT_EQ(R.one(), std::optional<Index>(e11));
  EXPECT_EQ(R.mul(e01, e10), R.zero());
  EXPECT_EQ(R.add(e01, e10), e11);
  EXPECT_EQ(R.find_label("(1,0)"), std::optional<Index>(e10));
}

TEST(TrivialExtension, MultiplicationLaw) {
  const auto Z4 = make_zmod(4);
  const auto T = make_trivial_extension(Bimodule::regular(Z4));
  ASSERT_EQ(T.size(), 16u);
  EXPECT_EQ(T.label(), "T(Z4,Z4)");
  // (a,s)(b,t) = (ab, at + sb)
  EXPECT_EQ(T.mul(pair_index(T, 2, 1), pair_index(T, 2, 1)), T.zero());
  EXPECT_EQ(T.mul(pair_index(T, 1, 1), pair_index(T, 1, 1)), pair_index(T, 1, 2));
  EXPECT_EQ(T.mul(pair_index(T, 3, 1), pair_index(T, 2, 3)), pair_index(T, 2, 3));
  EXPECT_EQ(T.one(), std::optional<Index>(pair_index(T, 1, 0)));
  // M squares to zero inside the extension.
  for (Index s = 0; s < 4; ++s) {
    for (Index t = 0; t < 4; ++t) EXPECT_EQ(T.mul(pair_index(T, 0, s), pair_index(T, 0, t)), T.zero());
  }
}

TEST(Endomorphism, RejectsNonMultiplicativeMap) {
  const auto Z4 = make_zmod(4);
  EXPECT_EQ(error_kind_of([&] { Endomorphism::from_images(Z4, {0, 2, 0, 2}, "double"); }),
            ErrorKind::AxiomViolation);
  EXPECT_EQ(error_kind_of([&] { Endomorphism::from_images(Z4, {0, 1, 2}, "short"); }),
            ErrorKind::InvalidArgument);
}

TEST(Endomorphism, SwapOnProduct) {
  const auto Z2 = make_zmod(2);
  const auto R = make_direct_product(Z2, Z2);
  const auto swap = swap_endomorphism(R);
  EXPECT_EQ(swap(pair_index(R, 0, 1)), pair_index(R, 1, 0));
  EXPECT_TRUE(swap.is_automorphism());
  EXPECT_EQ(swap.orbit(), (Orbit{0, 2}));
  EXPECT_EQ(swap.preserves_one(), std::optional<bool>(true));
  EXPECT_TRUE(same_map(swap.inverse(), swap));
  EXPECT_EQ(error_kind_of([] { swap_endomorphism(make_direct_product(make_zmod(2), make_zmod(3))); }),
            ErrorKind::InvalidArgument);
}

TEST(Endomorphism, NegateSecondComponent) {
  const auto T = make_trivial_extension(Bimodule::regular(make_zmod(4)));
  const auto alpha = negate_second_component(T);
  EXPECT_EQ(alpha(pair_index(T, 1, 1)), pair_index(T, 1, 3));
  EXPECT_EQ(alpha(pair_index(T, 2, 2)), pair_index(T, 2, 2));
  EXPECT_EQ(alpha.orbit(), (Orbit{0, 2}));
  EXPECT_EQ(error_kind_of([] { negate_second_component(make_zmod(4)); }), ErrorKind::InvalidArgument);
}

TEST(Endomorphism, ZeroMapOrbitAndPowers) {
  const auto Z4 = make_zmod(4);
  const auto zero = zero_endomorphism(Z4);
  EXPECT_FALSE(zero.is_injective());
  EXPECT_EQ(zero.orbit(), (Orbit{1, 1}));
  EXPECT_EQ(zero.preserves_one(), std::optional<bool>(false));
  EXPECT_EQ(zero.reduce_exponent(0), 0u);
  EXPECT_EQ(zero.reduce_exponent(7), 1u);
  EXPECT_EQ(zero.apply_power(0, 3), 3u);
  EXPECT_EQ(zero.apply_power(5, 3), 0u);
  EXPECT_EQ(error_kind_of([&] { zero.power_map(-1); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(error_kind_of([&] { zero.inverse(); }), ErrorKind::InvalidArgument);
}

TEST(Endomorphism, NegativePowersOfAutomorphism) {
  const auto F8 = make_galois_field(2, 3);
  const auto frob = frobenius(F8);
  ASSERT_EQ(frob.orbit(), (Orbit{0, 3}));
  EXPECT_EQ(frob.reduce_exponent(-1), 2u);
  EXPECT_EQ(frob.reduce_exponent(-3), 0u);
  for (Index x = 0; x < F8.size(); ++x) {
    EXPECT_EQ(frob.apply_power(-1, frob(x)), x);
    EXPECT_EQ(frob.apply_power(-2, x), frob(x));
  }
  // Negation is an automorphism of a ring with zero multiplication.
  const auto null = make_table_ring({0, 1, 2, 1, 2, 0, 2, 0, 1}, std::vector<Index>(9, 0), {"0", "1", "2"});
  const auto neg = negation_endomorphism(null);
  EXPECT_EQ(neg.orbit(), (Orbit{0, 2}));
  EXPECT_EQ(neg.apply_power(-1, 1), 2u);
}

TEST(Endomorphism, OrbitMatchesBruteForceIteration) {
  // orbit (t, p): least t, then least p, with alpha^(t+p) = alpha^t.
  const auto Z2 = make_zmod(2);
  const auto Z4 = make_zmod(4);
  const auto P = make_direct_product(Z4, Z2);
  // (a, b) -> (0, a mod 2) is additive and multiplicative.
  std::vector<Index> images(P.size());
  for (Index a = 0; a < 4; ++a) {
    for (Index b = 0; b < 2; ++b) images[pair_index(P, a, b)] = pair_index(P, 0, a % 2);
  }
  const auto alpha = table_endomorphism(P, images);
  std::vector<std::vector<Index>> powers{std::vector<Index>(P.size())};
  std::iota(powers[0].begin(), powers[0].end(), 0u);
  std::optional<Orbit> brute;
  for (std::size_t e = 1; e <= P.size() + 1 && !brute; ++e) {
    std::vector<Index> next(P.size());
    for (Index x = 0; x < P.size(); ++x) next[x] = alpha(powers.back()[x]);
    for (std::size_t t = 0; t < powers.size(); ++t) {
      if (powers[t] == next) {
        brute = Orbit{t, e - t};
        break;
      }
    }
    powers.push_back(next);
  }
  ASSERT_TRUE(brute);
  EXPECT_EQ(alpha.orbit(), *brute);
  EXPECT_EQ(endo_orbit(alpha), *brute);
  EXPECT_EQ(alpha.orbit(), (Orbit{2, 1}));
}

TEST(GaloisField, ModulusChoice) {
  EXPECT_EQ(galois_modulus(2, 2), (std::vector<unsigned>{1, 1, 1}));
  EXPECT_EQ(galois_modulus(2, 3), (std::vector<unsigned>{1, 0, 1, 1}));
  EXPECT_EQ(galois_modulus(3, 2), (std::vector<unsigned>{1, 0, 1}));
  EXPECT_EQ(error_kind_of([] { galois_modulus(4, 2); }), ErrorKind::InvalidArgument);
}

TEST(GaloisField, EveryNonzeroElementIsInvertible) {
  for (auto [p, k] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {5u, 2u}}) {
    const auto F = make_galois_field(p, k);
    ASSERT_EQ(F.size(), static_cast<std::size_t>(std::pow(p, k)));
    const Index one = *F.one();
    for (Index a = 1; a < F.size(); ++a) {
      bool found = false;
      for (Index b = 1; b < F.size(); ++b) found = found || F.mul(a, b) == one;
      EXPECT_TRUE(found) << F.label() << " element " << F.element_label(a);
    }
  }
}

TEST(GaloisField, FrobeniusOrbit) {
  EXPECT_EQ(frobenius(make_galois_field(2, 2)).orbit(), (Orbit{0, 2}));
  EXPECT_EQ(frobenius(make_galois_field(2, 3)).orbit(), (Orbit{0, 3}));
  EXPECT_EQ(frobenius(make_galois_field(3, 2)).orbit(), (Orbit{0, 2}));
  EXPECT_TRUE(frobenius(make_zmod(5)).is_identity());
  EXPECT_EQ(error_kind_of([] { frobenius(make_zmod(6)); }), ErrorKind::InvalidArgument);
}

TEST(Quotient, Z4ModTwo) {
  const auto Z4 = make_zmod(4);
  const std::vector<Index> members = {0, 2};
  const auto I = Ideal::from_members(Z4, members);
  EXPECT_EQ(I.size(), 2u);
  const auto Q = make_quotient(I);
  EXPECT_EQ(Q.ring.size(), 2u);
  EXPECT_EQ(Q.projection, (std::vector<Index>{0, 1, 0, 1}));
  EXPECT_EQ(Q.representative, (std::vector<Index>{0, 1}));
  EXPECT_EQ(Q.ring.mul(1, 1), 1u);
}

TEST(Quotient, InducedMapOnTrivialExtension) {
  // T(Z4, Z4) / (0 + Z4) is Z4, and (a, s) -> (a, -s) induces the identity.
  const auto T = make_trivial_extension(Bimodule::regular(make_zmod(4)));
  std::vector<Index> members;
  for (Index s = 0; s < 4; ++s) members.push_back(pair_index(T, 0, s));
  const auto I = Ideal::from_members(T, members);
  const auto Q = make_quotient(I);
  ASSERT_EQ(Q.ring.size(), 4u);
  EXPECT_EQ(Q.projection[pair_index(T, 3, 2)], Q.projection[pair_index(T, 3, 0)]);
  EXPECT_TRUE(induced_endomorphism(negate_second_component(T), I, Q).is_identity());
}

TEST(Quotient, RejectsNonIdeal) {
  const auto Z4 = make_zmod(4);
  const std::vector<Index> members = {0, 1};
  EXPECT_EQ(error_kind_of([&] { Ideal::from_members(Z4, members); }), ErrorKind::AxiomViolation);
}

TEST(Isomorphism, RelabelAndTransportCommute) {
  const auto T = make_trivial_extension(Bimodule::regular(make_zmod(4)));
  const auto alpha = negate_second_component(T);
  std::vector<Index> perm(T.size());
  std::iota(perm.begin(), perm.end(), 0u);
  std::reverse(perm.begin() + 1, perm.end());
  const auto [S, sigma] = relabel(T, perm);
  const auto beta = transport(sigma, alpha);
  ASSERT_TRUE(beta.ring().same_as(S));
  for (Index x = 0; x < T.size(); ++x) {
    EXPECT_EQ(beta(sigma(x)), sigma(alpha(x)));
    for (Index y = 0; y < T.size(); ++y) EXPECT_EQ(S.mul(sigma(x), sigma(y)), sigma(T.mul(x, y)));
  }
  EXPECT_EQ(beta.orbit(), alpha.orbit());
}

TEST(RingElement, CrossRingUseIsRejected) {
  const auto A = make_zmod(3), B = make_zmod(3);
  EXPECT_EQ(error_kind_of([&] { A.add(A.element(1), B.element(1)); }), ErrorKind::Mismatch);
  EXPECT_EQ(A.index_of(A.mul(A.element(2), A.element(2))), 1u);
  EXPECT_EQ(error_kind_of([&] { A.element(3); }), ErrorKind::InvalidArgument);
}

TEST(FiniteRing, WithLabelKeepsIdentity) {
  const auto Z3 = make_zmod(3);
  const auto named = Z3.with_label("F3");
  EXPECT_EQ(named.label(), "F3");
  EXPECT_TRUE(named.same_as(Z3));
}
