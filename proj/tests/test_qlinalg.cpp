#include <gtest/gtest.h>

#include "massey/qlinalg.hpp"

using namespace massey;

namespace {

QVector vec(std::initializer_list<long> xs) {
  QVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

QMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<QVector> r;
  for (auto row : rows) r.push_back(vec(row));
  return QMatrix::from_rows(r, r.empty() ? 0 : r.front().size());
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("+7")), "7");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
}

TEST(Rref, PivotsAndEntries) {
  auto [m, piv] = rref(mat({{2, 4, 6}, {1, 2, 4}}));
  EXPECT_EQ(piv, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(m, mat({{1, 2, 0}, {0, 0, 1}}));
  EXPECT_EQ(rank(mat({{0, 0}, {0, 0}})), 0u);
  EXPECT_EQ(rank(QMatrix::identity(4)), 4u);
}

TEST(Kernel, SingleRow) {
  auto k = kernel_vectors(mat({{1, 1, 0}}));
  ASSERT_EQ(k.size(), 2u);
  EXPECT_EQ(k[0], vec({-1, 1, 0}));
  EXPECT_EQ(k[1], vec({0, 0, 1}));
  EXPECT_EQ(kernel_basis(mat({{1, 1, 0}})).dim(), 2u);
}

TEST(Solve, ParticularAndInconsistent) {
  auto x = solve_particular(mat({{1, 1}}), vec({2}));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, vec({2, 0}));
  EXPECT_FALSE(solve_particular(mat({{0}}), vec({1})));
}

TEST(Subspace, CanonicalEquality) {
  auto a = SubspaceBasis::span(3, {vec({1, 1, 0}), vec({0, 1, 1})});
  auto b = SubspaceBasis::span(3, {vec({1, 2, 1}), vec({1, 0, -1})});
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.contains(vec({2, 3, 1})));
  EXPECT_FALSE(a.contains(vec({1, 0, 0})));
  auto c = a.coordinates(vec({2, 3, 1}));
  ASSERT_TRUE(c);
  QVector back(3);
  for (std::size_t i = 0; i < a.dim(); ++i) axpy(back, (*c)[i], a[i]);
  EXPECT_EQ(back, vec({2, 3, 1}));
}

TEST(Subspace, IntersectAndSum) {
  auto xy = SubspaceBasis::span(3, {vec({1, 0, 0}), vec({0, 1, 0})});
  auto yz = SubspaceBasis::span(3, {vec({0, 1, 0}), vec({0, 0, 1})});
  auto i = intersect(xy, yz);
  EXPECT_EQ(i, SubspaceBasis::span(3, {vec({0, 5, 0})}));
  EXPECT_EQ(sum(xy, yz).dim(), 3u);
  EXPECT_THROW(intersect(xy, SubspaceBasis(2)), std::invalid_argument);
}

TEST(Quotient, ModDiagonal) {
  Quotient q(SubspaceBasis::span(2, {vec({1, 1})}));
  ASSERT_EQ(q.dim(), 1u);
  // (x, y) maps to y - x.
  EXPECT_EQ(q.project(vec({3, 5})), vec({2}));
  EXPECT_EQ(q.project(vec({4, 4})), vec({0}));
  EXPECT_EQ(q.project(q.lift(vec({7}))), vec({7}));
}

TEST(SparseSystem, AgreesWithDense) {
  const QMatrix m = mat({{1, 2, 0, -1}, {0, 0, 3, 3}, {2, 4, 3, 1}, {1, 2, 0, -1}});
  const QVector b = vec({1, 6, 8, 1});
  SparseSystem s(4);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseRow row;
    for (std::size_t c = 0; c < 4; ++c)
      if (sgn(m(r, c)) != 0) row.emplace_back(c, m(r, c));
    s.add(row, b[r]);
  }
  EXPECT_EQ(s.rank(), rank(m));
  const auto x = s.particular();
  ASSERT_TRUE(x);
  EXPECT_EQ(m.apply(*x), b);
  const auto k = s.kernel();
  EXPECT_EQ(SubspaceBasis::span(4, k), kernel_basis(m));
  s.add({{0, Rational(1)}, {1, Rational(2)}, {3, Rational(-1)}}, Rational(5));
  EXPECT_FALSE(s.consistent());
  EXPECT_FALSE(s.particular());
}

TEST(Invert, SquareAndSingular) {
  const QMatrix m = mat({{2, 1}, {1, 1}});
  const auto inv = invert(m);
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv * m, QMatrix::identity(2));
  EXPECT_FALSE(invert(mat({{1, 2}, {2, 4}})));
  EXPECT_FALSE(invert(mat({{1, 2, 3}})));
}
