#include <gtest/gtest.h>

#include <random>

#include "jetscheme/linalg/smith.hpp"

namespace jetscheme {
namespace {

using MP = JetMatrix<ModP>;
using MQ = JetMatrix<Rational>;
using SP = JetScalar<ModP>;

const FieldTag Q = FieldTag::rationals();

MP from_literals(std::size_t a, std::size_t b, int m, FieldTag tag, std::initializer_list<const char*> lits) {
  std::vector<SP> entries;
  for (const char* s : lits) entries.push_back(SP::parse(s, m, tag));
  return MP::from_entries(a, b, m, tag, std::move(entries));
}

MQ q_literals(std::size_t a, std::size_t b, int m, std::initializer_list<const char*> lits) {
  std::vector<JetScalar<Rational>> entries;
  for (const char* s : lits) entries.push_back(JetScalar<Rational>::parse(s, m, Q));
  return MQ::from_entries(a, b, m, Q, std::move(entries));
}

MP random_matrix(std::mt19937_64& rng, std::size_t a, std::size_t b, int m, FieldTag tag, int zero_bias = 0) {
  std::uniform_int_distribution<std::int64_t> dist(0, tag.p - 1 + zero_bias);
  std::vector<SP> entries;
  for (std::size_t k = 0; k < a * b; ++k) {
    std::vector<ModP> c;
    for (int i = 0; i <= m; ++i) {
      const std::int64_t v = dist(rng);
      c.push_back(ModP::from_int(v >= tag.p ? 0 : v, tag));
    }
    entries.push_back(SP::from_coefficients(c, m, tag));
  }
  return MP::from_entries(a, b, m, tag, std::move(entries));
}

MP random_unit(std::mt19937_64& rng, std::size_t n, int m, FieldTag tag) {
  for (;;) {
    MP U = random_matrix(rng, n, n, m, tag);
    if (U.is_unit()) return U;
  }
}

template <class M>
void expect_sound(const M& A) {
  const auto snf = smith_normal_form(A);
  EXPECT_EQ(snf.U * A * snf.V, snf.D);
  EXPECT_TRUE(snf.U.is_unit());
  EXPECT_TRUE(snf.V.is_unit());
  EXPECT_TRUE(std::is_sorted(snf.diagonal_orders.begin(), snf.diagonal_orders.end()));
  EXPECT_EQ(static_cast<std::size_t>(snf.unit_count + snf.type.length()), std::min(A.rows(), A.cols()));
}

TEST(Smith, WorkedExampleWithUnitPivot) {
  const FieldTag f2 = FieldTag::prime(2);
  const MP A = from_literals(2, 2, 2, f2, {"t", "1", "0", "t"});
  const auto snf = smith_normal_form(A);
  EXPECT_EQ(snf.D, MP::diagonal_monomials(2, 2, {0, 2}, 2, f2));
  EXPECT_EQ(snf.unit_count, 1);
  EXPECT_EQ(snf.type, Partition({2}, 3));
  expect_sound(A);
}

TEST(Smith, DiagonalInputKeepsItsType) {
  const FieldTag f3 = FieldTag::prime(3);
  const std::vector<std::vector<int>> lambdas = {{}, {1}, {1, 1, 4}, {2, 3}, {5, 5}, {1, 2, 3, 4}};
  for (const auto& lambda : lambdas) {
    std::vector<int> orders(2, 0);
    orders.insert(orders.end(), lambda.begin(), lambda.end());
    const std::size_t n = orders.size();
    const MP D = MP::diagonal_monomials(n, n + 1, orders, 4, f3);
    EXPECT_EQ(type_of(D), Partition(lambda, 5));
  }
}

TEST(Smith, ZeroMatrix) {
  const MQ Z = MQ::zero(2, 2, 1, Q);
  const auto snf = smith_normal_form(Z);
  EXPECT_EQ(snf.D, Z);
  EXPECT_EQ(snf.unit_count, 0);
  EXPECT_EQ(snf.type, Partition({2, 2}, 2));
}

TEST(Smith, TypeExamples) {
  EXPECT_TRUE(type_of(MQ::identity(3, 2, Q)).is_empty());
  EXPECT_EQ(type_of(q_literals(1, 1, 1, {"t"})), Partition({1}, 2));
  EXPECT_EQ(type_of(q_literals(2, 2, 2, {"t", "1", "0", "t"})), Partition({2}, 3));
}

TEST(Smith, RationalEntriesAndNonMonicPivots) {
  const MQ A = q_literals(3, 2, 3, {"2*t + 1/3*t^2", "t^2", "t", "-1/2*t^3", "3*t^2", "6*t^2"});
  expect_sound(A);
  EXPECT_EQ(type_of(A), Partition({1, 2}, 4));
}

TEST(Smith, ReconstructionOnRandomMatrices) {
  std::mt19937_64 rng(17);
  for (std::uint32_t p : {2u, 3u, 7u}) {
    const FieldTag tag = FieldTag::prime(p);
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t a = 1 + trial % 4, b = 1 + (trial / 4) % 4;
      expect_sound(random_matrix(rng, a, b, trial % 4, tag, 3));
    }
  }
}

TEST(Smith, BasisAndTransposeInvariance) {
  std::mt19937_64 rng(23);
  const FieldTag f3 = FieldTag::prime(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t a = 2 + trial % 3, b = 1 + trial % 4;
    const int m = 1 + trial % 3;
    const MP A = random_matrix(rng, a, b, m, f3, 4);
    const Partition lambda = type_of(A);
    EXPECT_EQ(type_of(random_unit(rng, a, m, f3) * A * random_unit(rng, b, m, f3)), lambda);
    EXPECT_EQ(type_of(A.transpose()), lambda);
  }
}

TEST(Smith, TruncationCompatibility) {
  std::mt19937_64 rng(29);
  const FieldTag f2 = FieldTag::prime(2);
  for (int trial = 0; trial < 100; ++trial) {
    const MP A = random_matrix(rng, 3, 3, 4, f2, 2);
    const Partition lambda = type_of(A);
    for (int i = 0; i < 4; ++i) EXPECT_EQ(type_of(A.truncate(i)), truncate_partition(lambda, i + 1));
  }
}

TEST(MinorOrderType, AgreesWithNormalForm) {
  std::mt19937_64 rng(31);
  for (std::uint32_t p : {2u, 3u}) {
    const FieldTag tag = FieldTag::prime(p);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t a = 1 + trial % 3, b = 1 + (trial / 3) % 3;
      const MP A = random_matrix(rng, a, b, trial % 4, tag, 4);
      EXPECT_EQ(type_by_minor_orders(A), type_of(A));
    }
  }
  const MP A = from_literals(2, 2, 2, FieldTag::prime(2), {"t", "1", "0", "t"});
  EXPECT_EQ(type_by_minor_orders(A), Partition({2}, 3));
  EXPECT_EQ(type_by_minor_orders(MP::zero(2, 3, 1, FieldTag::prime(5))), Partition({2, 2}, 2));
  const MQ B = q_literals(2, 2, 3, {"1/2*t^2", "0", "0", "-3*t"});
  EXPECT_EQ(type_by_minor_orders(B), Partition({1, 2}, 4));
}

TEST(Minors, Examples) {
  EXPECT_TRUE(minors_vanish(q_literals(2, 2, 1, {"t", "0", "0", "t"}), 2));
  for (std::size_t s = 1; s <= 3; ++s) EXPECT_FALSE(minors_vanish(MQ::identity(3, 2, Q), s));
  EXPECT_FALSE(minors_vanish(q_literals(1, 1, 1, {"t"}), 1));
  try {
    (void)minors_vanish(MQ::identity(2, 1, Q), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::range);
  }
  EXPECT_THROW((void)minors_vanish(MQ::identity(2, 1, Q), 0), Error);
}

TEST(Minors, ExpansionMatchesBaseFieldDeterminant) {
  // At m = 0 the ring is the field itself.
  std::mt19937_64 rng(31);
  const FieldTag f5 = FieldTag::prime(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const MP A = random_matrix(rng, n, n, 0, f5);
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    EXPECT_EQ(minor_by_expansion(A, idx, idx)[0], determinant(A.coefficient_matrix(0)));
  }
}

TEST(Minors, CriterionMatchesDiagonalOrders) {
  std::mt19937_64 rng(37);
  for (std::uint32_t p : {2u, 3u}) {
    const FieldTag tag = FieldTag::prime(p);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t a = 1 + trial % 3, b = 1 + (trial / 3) % 3;
      const int m = trial % 4;
      const MP A = random_matrix(rng, a, b, m, tag, 3);
      const auto orders = smith_normal_form(A).diagonal_orders;
      for (std::size_t s = 1; s <= std::min(a, b); ++s) {
        int sum = 0;
        for (std::size_t k = 0; k < s; ++k) sum += orders[k];
        EXPECT_EQ(minors_vanish(A, s), sum >= m + 1);
      }
    }
  }
}

TEST(Linearize, MultiplicationByT) {
  const FieldTag f2 = FieldTag::prime(2);
  const auto M = linearize(from_literals(1, 1, 1, f2, {"t"}));
  ASSERT_EQ(M.rows(), 2u);
  ASSERT_EQ(M.cols(), 2u);
  EXPECT_EQ(M(0, 0).value(), 0u);
  EXPECT_EQ(M(0, 1).value(), 1u);
  EXPECT_EQ(M(1, 0).value(), 0u);
  EXPECT_EQ(M(1, 1).value(), 0u);
}

TEST(Linearize, ConstantMatrixIsBlockDiagonal) {
  const FieldTag f5 = FieldTag::prime(5);
  const MP A = from_literals(2, 3, 2, f5, {"1", "2", "3", "4", "0", "1"});
  const auto M = linearize(A);
  for (std::size_t r = 0; r < M.rows(); ++r) {
    for (std::size_t c = 0; c < M.cols(); ++c) {
      const std::size_t br = r / 2, bc = c / 3;
      const ModP expected = br == bc ? A(r % 2, c % 3)[0] : ModP::zero(f5);
      EXPECT_EQ(M(r, c), expected);
    }
  }
}

TEST(Linearize, WorkedExampleBlocks) {
  const FieldTag f2 = FieldTag::prime(2);
  const auto M = linearize(from_literals(2, 2, 2, f2, {"t", "1", "0", "t"}));
  // Block (i,j) = A_{j-i}: A_0 = [[0,1],[0,0]], A_1 = identity, A_2 = 0.
  const int expected[6][6] = {{0, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 1, 1, 0},
                              {0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0}};
  for (std::size_t r = 0; r < 6; ++r) {
    for (std::size_t c = 0; c < 6; ++c) EXPECT_EQ(M(r, c).value(), static_cast<std::uint32_t>(expected[r][c]));
  }
  EXPECT_EQ(kernel_dim(M), 2u);
}

TEST(KernelDim, Examples) {
  EXPECT_EQ(kernel_dim(BaseMatrix<Rational>(3, 4, Q)), 4u);
  EXPECT_EQ(kernel_dim(BaseMatrix<Rational>::identity(5, Q)), 0u);
  EXPECT_EQ(module_kernel_dim(q_literals(2, 2, 2, {"t", "0", "0", "t^2"})), 3u);
  EXPECT_EQ(module_kernel_dim(MQ::identity(3, 3, Q)), 0u);
  EXPECT_EQ(module_kernel_dim(MQ::zero(1, 1, 1, Q)), 2u);
}

// Frozen from tests/oracles/jet_oracles.py (elimination on the multiplication map).
TEST(KernelDim, OracleSamples) {
  EXPECT_EQ(module_kernel_dim(from_literals(2, 2, 2, FieldTag::prime(2), {"t", "1", "0", "t"})), 2u);
  EXPECT_EQ(module_kernel_dim(from_literals(2, 1, 2, FieldTag::prime(3), {"t", "t^2"})), 1u);
  EXPECT_EQ(module_kernel_dim(from_literals(3, 2, 3, FieldTag::prime(5),
                                            {"1 + t", "t", "t", "1 + t", "0", "t^2"})),
            0u);
}

TEST(KernelDim, HZeroLawForTallMatrices) {
  std::mt19937_64 rng(41);
  const FieldTag f3 = FieldTag::prime(3);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t b = 1 + trial % 3, a = b + (trial / 3) % 2;
    const int m = trial % 4;
    const MP A = random_matrix(rng, a, b, m, f3, 4);
    EXPECT_EQ(module_kernel_dim(A), static_cast<std::size_t>(h0_from_type(type_of(A), m)));
  }
}

TEST(JetMatrix, ShapeAndOperandChecks) {
  const FieldTag f2 = FieldTag::prime(2);
  EXPECT_THROW((void)(MP::identity(2, 1, f2) * MP::identity(3, 1, f2)), Error);
  EXPECT_THROW((void)(MP::identity(2, 1, f2) * MP::identity(2, 2, f2)), Error);
  EXPECT_THROW((void)MP::from_entries(2, 2, 1, f2, {}), Error);
}

}  // namespace
}  // namespace jetscheme
