#include <farey/sequences.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

using namespace farey;

namespace {

std::vector<std::string> render(const FareySeq& s) {
  std::vector<std::string> out;
  for (const auto& f : s) out.push_back(to_string(f));
  return out;
}

std::vector<std::string> render(const std::vector<oracle::Pair>& pairs) {
  std::vector<std::string> out;
  for (const auto& [h, k] : pairs) out.push_back(std::to_string(h) + "/" + std::to_string(k));
  return out;
}

const std::vector<std::string> kF6 = {"0/1", "1/6", "1/5", "1/4", "1/3", "2/5", "1/2",
                                      "3/5", "2/3", "3/4", "4/5", "5/6", "1/1"};

const std::vector<std::string> kFB12_6 = {"0/1", "1/7", "1/6", "1/5",  "1/4", "2/7", "1/3", "3/8", "2/5",
                                          "3/7", "4/9", "5/11", "1/2", "6/11", "5/9", "4/7", "3/5", "5/8",
                                          "2/3", "5/7", "3/4", "4/5", "5/6", "6/7", "1/1"};

}  // namespace

TEST(Farey, DisplayedOrderSix) { EXPECT_EQ(render(farey::farey(6)), kF6); }

TEST(Farey, SmallOrders) {
  EXPECT_EQ(render(farey::farey(1)), (std::vector<std::string>{"0/1", "1/1"}));
  EXPECT_EQ(farey::farey(7).size(), 19u);
  EXPECT_THROW(farey::farey(0), std::invalid_argument);
  EXPECT_THROW(farey::farey(kMaxOrder + 1), std::invalid_argument);
}

TEST(Farey, MatchesBruteForce) {
  for (Int n = 1; n <= 80; ++n) ASSERT_EQ(render(farey::farey(n)), render(oracle::brute_farey(n))) << n;
}

TEST(Farey, ConsecutiveTermsAreAdjacent) {
  for (Int n = 1; n <= 120; ++n) {
    const auto s = farey::farey(n);
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      ASSERT_EQ(s[i].k() * s[i + 1].h() - s[i].h() * s[i + 1].k(), 1) << n << " at " << i;
    }
  }
}

TEST(UpperSubsequence, Examples) {
  EXPECT_EQ(render(upper_subsequence(6, 1)),
            (std::vector<std::string>{"0/1", "1/6", "1/5", "1/4", "1/3", "1/2", "1/1"}));
  EXPECT_EQ(render(upper_subsequence(3, 2)), (std::vector<std::string>{"0/1", "1/3", "1/2", "2/3", "1/1"}));
  EXPECT_EQ(render(upper_subsequence(6, 5)), kF6);
  EXPECT_EQ(upper_subsequence(6, 5).descriptor().family, Family::upper);
  EXPECT_THROW(upper_subsequence(6, 6), std::invalid_argument);
  EXPECT_THROW(upper_subsequence(6, 0), std::invalid_argument);
}

TEST(FareyBoolean, Examples) {
  EXPECT_EQ(render(farey_boolean(12, 6)), kFB12_6);
  EXPECT_EQ(render(farey_boolean(2, 1)), (std::vector<std::string>{"0/1", "1/2", "1/1"}));
  EXPECT_EQ(render(farey_boolean(3, 1)), (std::vector<std::string>{"0/1", "1/3", "1/2", "1/1"}));
  EXPECT_THROW(farey_boolean(4, 4), std::invalid_argument);
  EXPECT_THROW(farey_boolean(4, 0), std::invalid_argument);
}

TEST(FareyBoolean, MatchesBruteForce) {
  for (Int n = 2; n <= 30; ++n) {
    for (Int m = 1; m < n; ++m) ASSERT_EQ(render(farey_boolean(n, m)), render(oracle::brute_boolean(n, m)));
  }
}

// (k-h)/k applied termwise and reversed turns F(B(n),m) into F(B(n),n-m).
TEST(FareyBoolean, ComplementDuality) {
  for (Int n = 2; n <= 30; ++n) {
    for (Int m = 1; m < n; ++m) {
      const auto s = farey_boolean(n, m);
      std::vector<Fraction> mapped;
      for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
        mapped.push_back(make_fraction(it->k() - it->h(), it->k()));
      }
      const auto dual = farey_boolean(n, n - m);
      ASSERT_TRUE(std::equal(mapped.begin(), mapped.end(), dual.begin(), dual.end())) << n << "," << m;
    }
  }
}

TEST(Halves, DisplayedSequence) {
  const auto s = farey_boolean_symmetric(6);
  const auto left = left_half(s);
  const auto right = right_half(s);
  EXPECT_EQ(left.size(), 13u);
  EXPECT_EQ(right.size(), 13u);
  EXPECT_EQ(left.front(), kZero);
  EXPECT_EQ(left.back(), kHalf);
  EXPECT_EQ(right.front(), kHalf);
  EXPECT_EQ(right.back(), kOne);
  EXPECT_EQ(left.descriptor(), SeqDescriptor::left_half(6));
  EXPECT_EQ(right.descriptor(), SeqDescriptor::right_half(6));
  EXPECT_EQ(render(left_half(farey_boolean(4, 2))), (std::vector<std::string>{"0/1", "1/3", "1/2"}));
}

TEST(Halves, SizesAddUp) {
  for (Int m = 1; m <= 40; ++m) {
    const auto s = farey_boolean_symmetric(m);
    EXPECT_EQ(left_half(s).size() + right_half(s).size(), s.size() + 1) << m;
  }
}

TEST(Halves, RequireSymmetricBoolean) {
  EXPECT_THROW(left_half(farey::farey(6)), std::invalid_argument);
  EXPECT_THROW(right_half(farey_boolean(12, 5)), std::invalid_argument);
  EXPECT_THROW(left_half(left_half(farey_boolean_symmetric(3))), std::invalid_argument);
}

TEST(IndexOf, Examples) {
  const auto s = farey_boolean(12, 6);
  EXPECT_EQ(index_of(s, make_fraction(1, 3)), 6u);
  EXPECT_EQ(index_of(s, kHalf), 12u);
  EXPECT_EQ(index_of(farey::farey(6), make_fraction(5, 7)), std::nullopt);
  EXPECT_EQ(index_of(s, make_fraction(1, 8)), std::nullopt);
  EXPECT_EQ(index_of(s, kZero), 0u);
  EXPECT_EQ(index_of(s, kOne), 24u);
}

TEST(MakeSequence, DispatchesOnFamily) {
  EXPECT_EQ(make_sequence(SeqDescriptor::standard(6)).size(), 13u);
  EXPECT_EQ(make_sequence(SeqDescriptor::boolean(12, 6)).size(), 25u);
  EXPECT_EQ(make_sequence(SeqDescriptor::boolean_symmetric(6)).size(), 25u);
  EXPECT_EQ(make_sequence(SeqDescriptor::left_half(6)).size(), 13u);
  EXPECT_EQ(make_sequence(SeqDescriptor::right_half(6)).back(), kOne);
  EXPECT_EQ(make_sequence(SeqDescriptor::upper(6, 1)).size(), 7u);
}

TEST(SeqDescriptor, Validation) {
  EXPECT_TRUE(SeqDescriptor::boolean(8, 4).is_symmetric_boolean());
  EXPECT_FALSE(SeqDescriptor::boolean(8, 3).is_symmetric_boolean());
  EXPECT_EQ(SeqDescriptor::boolean_symmetric(4).n, 8);
  EXPECT_THROW(SeqDescriptor::standard(0), std::invalid_argument);
  EXPECT_THROW(SeqDescriptor::boolean(3, 3), std::invalid_argument);
  EXPECT_THROW(SeqDescriptor::boolean_symmetric(0), std::invalid_argument);
}
