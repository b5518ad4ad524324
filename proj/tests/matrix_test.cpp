#include "ieh/matrix.hpp"

#include <gtest/gtest.h>

namespace ieh {
namespace {

TEST(Matrix, IdentityApply) {
  const Matrix I = Matrix::identity(3);
  const std::vector<double> x{1.0, 2.0, 3.0};
  EXPECT_EQ(I.apply(x), x);
}

TEST(Matrix, TransposeSwapsIndices) {
  Matrix m(2, 3);
  m(0, 1) = 5.0;
  m(1, 2) = -7.0;
  const Matrix t = m.transposed();
  EXPECT_EQ(t.rows(), 3u);
  EXPECT_EQ(t.cols(), 2u);
  EXPECT_DOUBLE_EQ(t(1, 0), 5.0);
  EXPECT_DOUBLE_EQ(t(2, 1), -7.0);
}

TEST(Matrix, MultiplyHandCase) {
  // [[1,2],[3,4]] * [[5,6],[7,8]] = [[19,22],[43,50]]
  Matrix a(2, 2), b(2, 2);
  a(0, 0) = 1; a(0, 1) = 2; a(1, 0) = 3; a(1, 1) = 4;
  b(0, 0) = 5; b(0, 1) = 6; b(1, 0) = 7; b(1, 1) = 8;
  const Matrix c = a * b;
  EXPECT_DOUBLE_EQ(c(0, 0), 19.0);
  EXPECT_DOUBLE_EQ(c(0, 1), 22.0);
  EXPECT_DOUBLE_EQ(c(1, 0), 43.0);
  EXPECT_DOUBLE_EQ(c(1, 1), 50.0);
}

TEST(Matrix, MaxAbsDiff) {
  Matrix a(2, 2), b(2, 2);
  a(0, 0) = 1.0;
  b(0, 0) = 1.5;
  b(1, 1) = -0.25;
  EXPECT_DOUBLE_EQ(Matrix::max_abs_diff(a, b), 0.5);
  EXPECT_DOUBLE_EQ(Matrix::max_abs_diff(a, a), 0.0);
}

}  // namespace
}  // namespace ieh
