#include <gtest/gtest.h>

#include <numeric>

#include "jetscheme/partitions/partition.hpp"

namespace jetscheme {
namespace {

TEST(Partition, Validation) {
  EXPECT_NO_THROW(Partition({1, 1, 3}, 3));
  EXPECT_THROW(Partition({2, 1}, 3), Error);
  EXPECT_THROW(Partition({0, 1}, 3), Error);
  EXPECT_THROW(Partition({1, 4}, 3), Error);
  EXPECT_THROW(Partition({}, 0), Error);
  EXPECT_EQ(Partition::from_unsorted({3, 1, 2}, 3), Partition({1, 2, 3}, 3));
}

TEST(Partition, LiteralRoundTrip) {
  for (const auto& lambda : all_partitions(3, 4)) EXPECT_EQ(Partition::parse(lambda.to_literal()), lambda);
  EXPECT_EQ(Partition({1, 2, 2}, 3).to_literal(), "(1,2,2)@3");
  EXPECT_EQ(Partition::empty(2).to_literal(), "()@2");
  EXPECT_EQ(Partition::parse(" ( 1 , 2 ) @ 4"), Partition({1, 2}, 4));
  EXPECT_THROW(Partition::parse("(1,2)"), ParseError);
  EXPECT_THROW(Partition::parse("(2,1)@3"), ParseError);
}

TEST(PartitionCounts, NandR) {
  const Partition a({1, 1, 2}, 2);
  EXPECT_EQ(n_of(a, 1), 3);
  EXPECT_EQ(n_of(a, 2), 1);
  EXPECT_EQ(n_of(Partition({1, 2, 2}, 3), 3), 0);
  EXPECT_EQ(r_of(a, 1), 2);
  EXPECT_EQ(r_of(a, 2), 1);
  EXPECT_EQ(r_of(a, 7), 0);
}

TEST(PartitionCounts, NIsTailSumOfR) {
  for (int l = 0; l <= 5; ++l) {
    for (const auto& lambda : all_partitions(l, 6)) {
      for (int k = 1; k <= 7; ++k) {
        int tail = 0;
        for (int j = k; j <= 7; ++j) tail += r_of(lambda, j);
        EXPECT_EQ(n_of(lambda, k), tail);
      }
    }
  }
}

TEST(PartitionCounts, ThreeSumsAgree) {
  for (int l = 0; l <= 5; ++l) {
    for (const auto& lambda : all_partitions(l, 6)) {
      int by_r = 0, by_n = 0;
      for (int j = 1; j <= 6; ++j) {
        by_r += r_of(lambda, j) * j;
        by_n += n_of(lambda, j);
      }
      EXPECT_EQ(lambda.sum(), by_r);
      EXPECT_EQ(lambda.sum(), by_n);
    }
  }
}

TEST(Truncate, Examples) {
  EXPECT_EQ(truncate_partition(Partition({1, 3, 3}, 3), 2), Partition({1, 2, 2}, 2));
  const Partition lambda({1, 2, 4}, 4);
  EXPECT_EQ(truncate_partition(lambda, 4), lambda);
  EXPECT_EQ(truncate_partition(Partition({2}, 2), 1), Partition({1}, 1));
}

TEST(ThetaCriterion, Examples) {
  EXPECT_TRUE(theta_jet_criterion(Partition({1, 1}, 2), 1));
  for (int m = 0; m < 5; ++m) EXPECT_FALSE(theta_jet_criterion(Partition::empty(m + 1), m));
  EXPECT_FALSE(theta_jet_criterion(Partition({1}, 2), 1));
  try {
    (void)theta_jet_criterion(Partition({1}, 3), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::instance);
  }
}

TEST(WrdCriterion, Examples) {
  EXPECT_TRUE(wrd_jet_criterion(Partition({1, 2, 2}, 3), 2, 1));
  EXPECT_FALSE(wrd_jet_criterion(Partition({1, 1, 3}, 5), 4, 1));
  for (int l = 0; l <= 4; ++l) {
    for (const auto& lambda : all_partitions(l, 4)) {
      EXPECT_EQ(wrd_jet_criterion(lambda, 3, 0), theta_jet_criterion(lambda, 3));
    }
  }
  EXPECT_THROW((void)wrd_jet_criterion(Partition({1, 2}, 3), 2, 3), Error);
}

TEST(WrdCriterion, SmallestPartsBruteForce) {
  for (int l = 1; l <= 5; ++l) {
    for (const auto& lambda : all_partitions(l, 5)) {
      for (int r = 0; r <= l; ++r) {
        const auto& parts = lambda.parts();
        const int smallest = std::accumulate(parts.begin(), parts.begin() + (l - r), 0);
        EXPECT_EQ(wrd_jet_criterion(lambda, 4, r), smallest >= 5);
      }
    }
  }
}

TEST(HZero, Examples) {
  EXPECT_EQ(h0_from_type(Partition({1, 1, 2}, 2), 0), 3);
  EXPECT_EQ(h0_from_type(Partition({2}, 2), 1), 2);
  for (int j = 0; j < 3; ++j) EXPECT_EQ(h0_from_type(Partition::empty(3), j), 0);
  EXPECT_THROW((void)h0_from_type(Partition({1}, 2), 2), Error);
}

TEST(HZero, FullLevelEqualsSum) {
  for (int l = 0; l <= 4; ++l) {
    for (const auto& lambda : all_partitions(l, 5)) EXPECT_EQ(h0_from_type(lambda, 4), lambda.sum());
  }
}

TEST(SignatureOf, Examples) {
  EXPECT_EQ(signature_of(Partition({1, 2, 2}, 3)), Signature({2, 0}));
  EXPECT_EQ(signature_of(Partition({1, 1, 1}, 4)), Signature({0, 0, 0}));
  EXPECT_EQ(signature_of(Partition({3, 3}, 3)), Signature({2, 2}));
  EXPECT_THROW(Signature({1, 2}), Error);
  EXPECT_THROW(Signature({-1}), Error);
}

TEST(SquareIdentity, Examples) {
  const auto a = square_identity(Partition({1, 2, 2}, 2));
  EXPECT_EQ(a.lhs, 13);
  EXPECT_EQ(a.rhs, 13);
  const auto b = square_identity(Partition({1}, 1));
  EXPECT_EQ(b.lhs, 1);
  EXPECT_EQ(b.rhs, 1);
  for (int k = 1; k <= 9; ++k) {
    const auto c = square_identity(Partition({k}, 9));
    EXPECT_EQ(c.lhs, k);
    EXPECT_EQ(c.rhs, k);
  }
  EXPECT_THROW((void)square_identity(Partition::empty(3)), Error);
}

TEST(Admissible, Examples) {
  EXPECT_EQ(enumerate_admissible(1, 0, 1), std::vector<Partition>({Partition({2}, 2)}));
  EXPECT_EQ(enumerate_admissible(2, 0, 1),
            std::vector<Partition>({Partition({1, 1}, 2), Partition({1, 2}, 2), Partition({2, 2}, 2)}));
  EXPECT_EQ(enumerate_admissible(1, 0, 0), std::vector<Partition>({Partition({1}, 1)}));
  EXPECT_THROW((void)enumerate_admissible(2, 2, 1), Error);
}

TEST(Admissible, MatchesBruteForceFilterInOrder) {
  for (int l = 1; l <= 5; ++l) {
    for (int r = 0; r < l; ++r) {
      for (int m = 0; m <= 4; ++m) {
        std::vector<Partition> expected;
        for (const auto& lambda : all_partitions(l, m + 1)) {
          if (wrd_jet_criterion(lambda, m, r)) expected.push_back(lambda);
        }
        const auto got = enumerate_admissible(l, r, m);
        EXPECT_EQ(got, expected);
        EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
      }
    }
  }
}

TEST(PartitionStream, RestartableAndCounted) {
  // |Lambda_{l,c}| = C(l+c-1, l).
  PartitionStream s(3, 4);
  int count = 0;
  while (s.next()) ++count;
  EXPECT_EQ(count, 20);
  EXPECT_FALSE(s.next());
  s.reset();
  EXPECT_EQ(*s.next(), Partition({1, 1, 1}, 4));
  PartitionStream empty_len(0, 3);
  EXPECT_EQ(*empty_len.next(), Partition::empty(3));
  EXPECT_FALSE(empty_len.next());
}

}  // namespace
}  // namespace jetscheme
