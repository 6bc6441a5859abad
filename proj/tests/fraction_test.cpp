#include <farey/bijections.hpp>
#include <farey/fraction.hpp>
#include <farey/sequences.hpp>

#include <boost/multiprecision/cpp_int.hpp>
#include <gtest/gtest.h>

#include <random>

using namespace farey;

TEST(MakeFraction, ReducesAndCanonicalizes) {
  EXPECT_EQ(make_fraction(2, 4), make_fraction(1, 2));
  EXPECT_EQ(make_fraction(2, 4).h(), 1);
  EXPECT_EQ(make_fraction(2, 4).k(), 2);

  const auto zero = make_fraction(0, 7);
  EXPECT_EQ(zero.h(), 0);
  EXPECT_EQ(zero.k(), 1);

  const auto f = make_fraction(3, 8);
  EXPECT_EQ(f.h(), 3);
  EXPECT_EQ(f.k(), 8);
  EXPECT_EQ(make_fraction(6, 6), kOne);
}

TEST(MakeFraction, RejectsOutOfRange) {
  EXPECT_THROW(make_fraction(1, 0), std::invalid_argument);
  EXPECT_THROW(make_fraction(0, 0), std::invalid_argument);
  EXPECT_THROW(make_fraction(5, 4), std::invalid_argument);
  EXPECT_THROW(make_fraction(-1, 4), std::invalid_argument);
  EXPECT_THROW(make_fraction(3, -4), std::invalid_argument);
}

TEST(MakeReducedFraction, AssertsReducedness) {
  EXPECT_NO_THROW(make_reduced_fraction(3, 7));
  EXPECT_THROW(make_reduced_fraction(2, 4), std::logic_error);
  EXPECT_THROW(make_reduced_fraction(5, 4), std::domain_error);
}

TEST(Compare, Examples) {
  EXPECT_EQ(compare(make_fraction(1, 3), make_fraction(2, 5)), std::strong_ordering::less);
  EXPECT_EQ(compare(kHalf, make_fraction(1, 2)), std::strong_ordering::equal);
  EXPECT_EQ(compare(make_fraction(4, 9), make_fraction(5, 11)), std::strong_ordering::less);
  EXPECT_EQ(compare(kOne, make_fraction(5, 6)), std::strong_ordering::greater);
}

TEST(Compare, AgreesWithArbitraryPrecisionCrossMultiplication) {
  using boost::multiprecision::cpp_int;
  std::mt19937_64 rng(20240611);
  // Denominators span the whole positive int64 range, so the products need
  // more than 64 bits.
  std::uniform_int_distribution<Int> den(1, std::numeric_limits<Int>::max());
  for (int trial = 0; trial < 20000; ++trial) {
    const Int k1 = trial % 2 ? den(rng) : den(rng) % 1000 + 1;
    const Int k2 = den(rng);
    const Int h1 = std::uniform_int_distribution<Int>(0, k1)(rng);
    const Int h2 = std::uniform_int_distribution<Int>(0, k2)(rng);
    const auto x = make_fraction(h1, k1), y = make_fraction(h2, k2);
    const cpp_int lhs = cpp_int(x.h()) * y.k(), rhs = cpp_int(y.h()) * x.k();
    const auto expected = lhs < rhs ? std::strong_ordering::less
                                    : (lhs == rhs ? std::strong_ordering::equal : std::strong_ordering::greater);
    ASSERT_EQ(compare(x, y), expected) << x << " vs " << y;
    ASSERT_EQ(x == y, lhs == rhs);
  }
}

TEST(ApplyMap, Examples) {
  EXPECT_EQ(apply_map({-1, 1, 0, 1}, make_fraction(1, 3)), make_fraction(2, 3));
  EXPECT_EQ(apply_map(kIdentityMap, make_fraction(5, 8)), make_fraction(5, 8));
  EXPECT_EQ(apply_map({1, 0, 1, 1}, make_fraction(1, 3)), make_fraction(1, 4));
}

TEST(ApplyMap, OutsideDomainIsDomainError) {
  // h/(k-h) sends 2/3 to 2/1.
  EXPECT_THROW(apply_map(maps::kLeftToFarey, make_fraction(2, 3)), std::domain_error);
  // h/(3h-k) sends 1/4 to a negative denominator.
  EXPECT_THROW(apply_map(maps::kRightInvolution, make_fraction(1, 4)), std::domain_error);
}

TEST(ApplyMap, NonUnimodularImageFailsLoudly) {
  EXPECT_THROW(apply_map({-1, 1, 0, 2}, make_fraction(1, 3)), std::logic_error);
}

TEST(UnimodularMap, InverseAndProducts) {
  const UnimodularMap all[] = {maps::kComplement,   maps::kLeftInvolution, maps::kRightInvolution,
                               maps::kLeftToRight,  maps::kRightToLeft,    maps::kLeftToFarey,
                               maps::kFareyToLeft,  maps::kRightToFarey,   maps::kFareyToRight};
  for (const auto& m : all) {
    EXPECT_TRUE(m.is_unimodular()) << to_string(m);
    EXPECT_EQ(m * inverse(m), kIdentityMap);
    EXPECT_EQ(inverse(m) * m, kIdentityMap);
  }
  EXPECT_THROW(inverse({1, 0, 0, 2}), std::domain_error);
}

// apply(M, apply(M^-1, f)) == f over each catalog map's codomain.
TEST(ApplyMap, RoundTripThroughInverseOnCodomains) {
  for (Int m = 2; m <= 12; ++m) {
    for (const auto& d : catalog(2 * m, m)) {
      const auto inv = inverse(d.matrix);
      for (const auto& f : make_sequence(d.codomain)) {
        ASSERT_EQ(apply_map(d.matrix, apply_map(inv, f)), f) << d.name << " m=" << m << " f=" << f;
      }
    }
  }
}

TEST(FractionText, RenderAndParse) {
  EXPECT_EQ(to_string(make_fraction(5, 11)), "5/11");
  EXPECT_EQ(parse_fraction("5/11"), make_fraction(5, 11));
  EXPECT_EQ(parse_fraction("2/4"), kHalf);
  for (const char* bad : {"", "3", "/4", "3/", "-1/2", "+1/2", "1/2x", "a/b", "1 /2", "3/2", "1/0"}) {
    EXPECT_THROW(parse_fraction(bad), std::invalid_argument) << bad;
  }
}

TEST(FractionText, RoundTripProperty) {
  std::mt19937 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Int k = std::uniform_int_distribution<Int>(1, 1'000'000)(rng);
    const auto f = make_fraction(std::uniform_int_distribution<Int>(0, k)(rng), k);
    ASSERT_EQ(parse_fraction(to_string(f)), f);
  }
}
