#include <hexcount/matchcount.hpp>
#include <hexcount/pathdet.hpp>
#include <hexcount/special.hpp>

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

using namespace hexcount;
using namespace hexcount::pathdet;

namespace {

std::vector<std::vector<Rat>> rows(const ExactMatrix& m) {
  std::vector<std::vector<Rat>> r(m.order(), std::vector<Rat>(m.order()));
  for (std::size_t i = 1; i <= m.order(); ++i)
    for (std::size_t j = 1; j <= m.order(); ++j) r[i - 1][j - 1] = m.at(i, j);
  return r;
}

Rat random_rat(std::mt19937& rng, int span) {
  std::uniform_int_distribution<int> num(-span, span), den(1, 6);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

}  // namespace

TEST(PathDet, BareissMatchesCofactorExpansion) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> size(1, 6);
  std::bernoulli_distribution zero(0.3);
  for (int trial = 0; trial < 200; ++trial) {
    ExactMatrix m(size(rng));
    for (std::size_t i = 1; i <= m.order(); ++i)
      for (std::size_t j = 1; j <= m.order(); ++j) m.at(i, j) = zero(rng) ? Rat(0) : random_rat(rng, 9);
    EXPECT_EQ(det_exact(m), oracle::laplace_det(rows(m)));
  }
  EXPECT_EQ(det_exact(ExactMatrix(0)), 1);
}

TEST(PathDet, SingularAndRank) {
  ExactMatrix m(3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) m.at(i, j) = i * j;
  EXPECT_EQ(det_exact(m), 0);
  EXPECT_EQ(rank_exact(m), 1u);
  m.at(3, 3) = 10;
  EXPECT_EQ(rank_exact(m), 2u);
  EXPECT_EQ(rank_exact(m.block(1)), 1u);
  EXPECT_THROW(m.block(4), std::out_of_range);
}

TEST(PathDet, MatrixJsonUsesFractions) {
  ExactMatrix m(2);
  m.at(1, 1) = Rat(1, 2);
  m.at(2, 2) = 3;
  EXPECT_EQ(m.to_json().dump(), R"([["1/2","0/1"],["0/1","3/1"]])");
}

TEST(PathDet, PathCountsMatchGridWalk) {
  for (int x0 = -2; x0 <= 2; ++x0)
    for (int y0 = -2; y0 <= 3; ++y0)
      for (int x1 = -2; x1 <= 4; ++x1)
        for (int y1 = -3; y1 <= 3; ++y1)
          EXPECT_EQ(path_count({x0, y0}, {x1, y1}), oracle::grid_paths(x0, y0, x1, y1));
}

TEST(PathDet, HalfFirstStep) {
  // one horizontal start at weight 1/2 plus the vertical starts
  const Point p{0, 2}, q{2, 0};
  EXPECT_EQ(weighted_path_count(p, q, false), 6);
  EXPECT_EQ(weighted_path_count(p, q, true), Rat(3, 2) + 3);
  EXPECT_EQ(weighted_path_count(p, p, true), 1);
}

TEST(PathDet, LgvMatricesEqualTheExplicitBuilders) {
  for (int n = 1; n <= 6; ++n)
    for (int m = 0; m <= 5; ++m) {
      EXPECT_EQ(lgv_matrix(upper_paths(n, m)), matrix_gplus(n, m));
      if (m >= 1)
        for (int s = 0; s < n; ++s) EXPECT_EQ(lgv_matrix(lower_paths(n, m, s)), matrix_A(n, m, s));
      for (int s = 1; s <= n; ++s) EXPECT_EQ(lgv_matrix(lower_paths_odd(n, m, s)), matrix_A_tilde(n, m, s));
    }
}

TEST(PathDet, UpperDeterminantCountsUpperHalf) {
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= 4; ++m) {
      const auto h = geometry::split_halves({n, 2 * m, n > 1 ? 1 : 0});
      EXPECT_EQ(det_exact(matrix_gplus(n, m)), matchcount::count_tilings(h.upper)) << n << " " << m;
    }
}

TEST(PathDet, LowerDeterminantCountsWeightedLowerHalf) {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 3; ++m)
      for (int s = 0; s < n; ++s) {
        const auto h = geometry::split_halves({n, 2 * m, s});
        EXPECT_EQ(det_exact(matrix_A(n, m, s)), matchcount::count_tilings(h.lower)) << n << " " << m << " " << s;
      }
}

TEST(PathDet, OddLowerMatrixShiftsToEvenOne) {
  for (int n = 2; n <= 6; ++n)
    for (int m = 0; m <= 4; ++m)
      for (int s = 1; s <= n - 1; ++s)
        EXPECT_EQ(det_exact(matrix_A_tilde(n, m, s)), det_exact(matrix_A(n - 1, m + 1, s - 1)));
}

TEST(PathDet, OddHalvesAgainstMatchings) {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 3; ++m)
      for (int s = 1; s <= n; ++s) {
        const auto h = geometry::split_halves({n, 2 * m + 1, s});
        EXPECT_EQ(det_exact(matrix_gplus(n + 1, m)), matchcount::count_tilings(h.upper));
        EXPECT_EQ(det_exact(matrix_A_tilde(n, m, s == n ? 1 : s)), matchcount::count_tilings(h.lower));
      }
}

TEST(PathDet, TwoFormsOfB) {
  for (int n = 1; n <= 6; ++n)
    for (int s = 0; s < n; ++s)
      for (const Rat& m : {Rat(1), Rat(3), Rat(-5, 2), Rat(7, 3)})
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j) {
            if (i == s + 1) continue;
            EXPECT_EQ(b_entry(n, m, s, i, j), b_entry_alt(n, m, i, j));
          }
}

TEST(PathDet, BAgreesWithAAfterColumnScaling) {
  // det B times the prefactor reproduces det A
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= 4; ++m)
      for (int s = 0; s < n; ++s) EXPECT_EQ(m_gminus(n, m, s), det_exact(matrix_A(n, m, s)));
}

TEST(PathDet, CRowsAreBRowsOverHalfTheFactor) {
  // B_ij = (1/2) (m+1-i+n)_{2i-n-1} C_ij off the special row
  for (int n = 1; n <= 6; ++n)
    for (int s = 0; s < n; ++s)
      for (const Rat& m : {Rat(2), Rat(5), Rat(-7, 2), Rat(11, 3)}) {
        const auto B = matrix_B(n, m, s), C = matrix_C(n, m, s);
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j) {
            if (i == s + 1) {
              EXPECT_EQ(B.at(i, j), C.at(i, j));
              continue;
            }
            EXPECT_EQ(B.at(i, j), Rat(1, 2) * c_row_factor(n, m, i) * C.at(i, j)) << n << s << i << j;
          }
      }
}

TEST(PathDet, KrattenthalerProductOnRandomVectors) {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> size(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = size(rng);
    std::vector<Rat> x(n), a(n), b(n);
    for (int k = 0; k < n; ++k) x[k] = random_rat(rng, 8), a[k] = random_rat(rng, 8), b[k] = random_rat(rng, 8);
    EXPECT_EQ(det_exact(krattenthaler_matrix(x, a, b)), krattenthaler_product(x, a, b));
  }
  EXPECT_THROW(krattenthaler_matrix({1, 2}, {1}, {1, 2}), std::invalid_argument);
}

TEST(PathDet, BoxDeterminant) {
  for (int a = 1; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 4; ++c) EXPECT_EQ(det_exact(matrix_box(a, b, c)), Rat(oracle::macmahon(a, b, c)));
}

TEST(PathDet, RangeChecks) {
  EXPECT_THROW(matrix_A(2, 1, 2), std::invalid_argument);
  EXPECT_THROW(matrix_A(2, 0, 0), std::invalid_argument);
  EXPECT_THROW(matrix_A_tilde(2, 1, 0), std::invalid_argument);
  EXPECT_THROW(matrix_gplus(0, 1), std::invalid_argument);
  EXPECT_THROW(matrix_B(3, 1, 3), std::invalid_argument);
}
