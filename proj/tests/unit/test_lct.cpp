#include <gtest/gtest.h>

#include "jetscheme/loci/lct.hpp"

namespace jetscheme {
namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

TEST(LctClosedForm, Examples) {
  EXPECT_EQ(lct_closed_form({4, 3, 1, 2}), q(4));
  for (int g = 2; g <= 9; ++g) {
    for (int l = 1; l <= g; ++l) EXPECT_EQ(lct_closed_form({g, g - 1, 0, l}), q(1));
  }
  for (int g = 3; g <= 8; ++g) {
    for (int d = 1; d < g; ++d) {
      for (int r = 0; r <= 2; ++r) {
        const int l = r + 1;
        EXPECT_EQ(lct_closed_form({g, d, r, l}), q(static_cast<std::int64_t>(l) * (g - d + l - 1)));
      }
    }
  }
}

TEST(LctClosedForm, EmptyRangeAndInvalidParams) {
  try {
    (void)lct_closed_form({5, 3, 2, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::range);
  }
  try {
    (void)lct_lp_oracle({5, 6, 0, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::instance);
  }
}

// Frozen from tests/oracles/jet_oracles.py.
TEST(LctClosedForm, OracleTable) {
  EXPECT_EQ(lct_closed_form({12, 5, 1, 6}), q(40, 3));
  EXPECT_EQ(lct_closed_form({5, 2, 0, 1}), q(3));
  EXPECT_EQ(lct_closed_form({6, 3, 1, 3}), q(15, 2));
  EXPECT_EQ(lct_closed_form({7, 4, 2, 4}), q(12));
  EXPECT_EQ(lct_closed_form({9, 8, 0, 4}), q(1));
}

TEST(LctLpOracle, AgreesWithClosedForm) {
  int checked = 0;
  for (int g = 2; g <= 12; ++g) {
    for (int d = 1; d <= g - 1; ++d) {
      for (int l = 1; l <= d + 1; ++l) {
        for (int r = 0; r < l; ++r) {
          ASSERT_EQ(lct_lp_oracle({g, d, r, l}), lct_closed_form({g, d, r, l}))
              << "g=" << g << " d=" << d << " r=" << r << " l=" << l;
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(LctLpOracle, NonIncreasingInLOnSmallGrid) {
  // Reported property; a regression here flags a change in the closed form.
  for (int g = 4; g <= 7; ++g) {
    for (int d = 2; d <= g - 1; ++d) {
      for (int r = 0; r <= 1; ++r) {
        for (int l = r + 1; l < d + 1; ++l) {
          EXPECT_GE(lct_closed_form({g, d, r, l}), lct_closed_form({g, d, r, l + 1}))
              << "g=" << g << " d=" << d << " r=" << r << " l=" << l;
        }
      }
    }
  }
}

TEST(VertexSolver, GenericCoveringProgram) {
  const CoveringLp lp{{q(3), q(5), q(2)}, {q(1), q(4), q(1, 2)}};
  const auto sol = solve_by_vertices(lp);
  // Axis vertices cost 3/1, 5/4, 2/(1/2) = 4.
  EXPECT_EQ(sol.value, q(5, 4));
  ASSERT_EQ(sol.vertex.size(), 3u);
  EXPECT_EQ(sol.vertex[1], q(1, 4));
  EXPECT_EQ(sol.vertices_visited, 4u);
  EXPECT_THROW((void)solve_by_vertices({{q(-1)}, {q(1)}}), Error);
  EXPECT_THROW((void)solve_by_vertices({{q(1)}, {q(0)}}), Error);
}

TEST(Mustata, Examples) {
  const auto two_by_two = mustata_lct(4, {3, 6});
  EXPECT_EQ(two_by_two.value, q(1));
  EXPECT_EQ(two_by_two.horizon, 1);
  EXPECT_EQ(mustata_lct(3, {3}).value, q(0));
  for (int n = 2; n <= 6; ++n) {
    std::vector<std::int64_t> dims;
    for (int m = 0; m <= 5; ++m) dims.push_back(static_cast<std::int64_t>(m + 1) * (n - 1));
    EXPECT_EQ(mustata_lct(n, dims).value, q(1));
  }
  const auto uneven = mustata_lct(5, {3, 7, 9});
  EXPECT_EQ(uneven.value, q(3, 2));
  EXPECT_EQ(uneven.argmax_m, 1);
  try {
    (void)mustata_lct(4, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::input);
  }
  EXPECT_THROW((void)mustata_lct(4, {-1}), Error);
}

}  // namespace
}  // namespace jetscheme
