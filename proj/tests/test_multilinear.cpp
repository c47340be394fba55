#include <gtest/gtest.h>

#include <random>

#include "massey/multilinear.hpp"

using namespace massey;

namespace {

QVector random_vector(std::mt19937& rng, std::size_t r) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  QVector v;
  for (std::size_t i = 0; i < r; ++i) v.push_back(make_rational(num(rng), den(rng)));
  return v;
}

bool in_R(const MMap& m, const QVector& v) { return is_zero(m.matrix.apply(v)); }

}  // namespace

TEST(PowerBasis, Counts) {
  EXPECT_EQ(PowerBasis(GradedBasis::uniform(3, 0), PowerKind::Symmetric, 2).size(), 6u);
  EXPECT_EQ(PowerBasis(GradedBasis::uniform(6, 0), PowerKind::Exterior, 2).size(), 15u);
  EXPECT_EQ(PowerBasis(GradedBasis::uniform(2, 0), PowerKind::Exterior, 3).size(), 0u);
  EXPECT_EQ(PowerBasis(GradedBasis::uniform(3, 0), PowerKind::Tensor, 2).size(), 9u);
  // Odd classes square to zero in the graded-symmetric square, even ones in the antisymmetric.
  EXPECT_EQ(PowerBasis(GradedBasis::uniform(3, 3), PowerKind::GradedSymmetric, 2).size(), 3u);
  EXPECT_EQ(PowerBasis(GradedBasis::uniform(3, 3), PowerKind::GradedAntisymmetric, 2).size(), 6u);
  EXPECT_EQ(PowerBasis(GradedBasis::uniform(3, 2), PowerKind::GradedAntisymmetric, 2).size(), 3u);
}

TEST(PowerBasis, LocateSigns) {
  GradedBasis b{{3, 3, 2}, {"a", "b", "c"}};
  PowerBasis sym(b, PowerKind::GradedSymmetric, 2);
  EXPECT_EQ(sym.locate({1, 0}).sign, -1);
  EXPECT_EQ(sym.locate({2, 0}).sign, 1);
  EXPECT_EQ(sym.locate({0, 0}).sign, 0);
  PowerBasis alt(b, PowerKind::GradedAntisymmetric, 2);
  EXPECT_EQ(alt.locate({1, 0}).sign, 1);
  EXPECT_EQ(alt.locate({2, 0}).sign, -1);
  EXPECT_EQ(alt.locate({2, 2}).sign, 0);
  EXPECT_NE(alt.locate({0, 0}).sign, 0);
  PowerBasis bounded(b, PowerKind::GradedSymmetric, 2, 5);
  EXPECT_EQ(bounded.size(), 3u);  // ab, ac, bc, cc(4) minus ab(6): ac, bc, cc
  EXPECT_EQ(bounded.locate({0, 1}).sign, 0);
}

TEST(MMap, DegreeTwoRanks) {
  EXPECT_EQ(m_map_degree2(1).domain.size(), 0u);
  auto m = m_map_degree2(3);
  EXPECT_EQ(m.domain.size(), 45u);
  EXPECT_EQ(m.codomain.size(), 60u);
  EXPECT_EQ(rank(m.matrix), 39u);
}

TEST(MMap, ExactnessAgainstFormula) {
  for (std::size_t r = 1; r <= 5; ++r) {
    auto m = m_map_degree2(r);
    const std::size_t rk = rank(m.matrix);
    const auto p5 = binomial(r + 4, 5);
    EXPECT_EQ(mpz_class(static_cast<unsigned long>(rk)) + p5, mpz_class(static_cast<unsigned long>(m.codomain.size())))
        << "r=" << r;
    const auto dimR = m.domain.size() - rk;
    EXPECT_EQ(mpz_class(static_cast<unsigned long>(dimR)), 6 * binomial(r + 2, 5)) << "r=" << r;
  }
}

TEST(ComputeR, KnownDimensions) {
  EXPECT_EQ(compute_R(2).dim(), 0u);
  EXPECT_EQ(compute_R(3).dim(), 6u);
  EXPECT_EQ(compute_R(5).dim(), 126u);
}

TEST(Weyl, Dimensions) {
  EXPECT_EQ(weyl_dim({5}, 3), 21);
  EXPECT_EQ(weyl_dim({1, 1}, 4), 6);
  EXPECT_EQ(weyl_dim({3, 1, 1}, 3), 6);
  EXPECT_EQ(weyl_dim({1, 1, 1}, 2), 0);
  for (long r = 1; r <= 8; ++r) EXPECT_EQ(weyl_dim({3, 1, 1}, r), 6 * binomial(r + 2, 5)) << r;
}

TEST(Weyl, PieriConsistency) {
  for (long r = 1; r <= 5; ++r) {
    const mpz_class p2 = binomial(r + 1, 2);
    const mpz_class lhs = weyl_dim({4, 1}, r) + weyl_dim({3, 2}, r) + weyl_dim({3, 1, 1}, r);
    EXPECT_EQ(lhs, r * p2 * (p2 - 1) / 2) << r;
  }
}

TEST(Star, ConstantInputVanishes) {
  auto m = m_map_degree2(3);
  QVector x{1, 2, 3};
  EXPECT_TRUE(is_zero(star(m, {x, x, x, x, x})));
}

TEST(Star, BasisInputLiesInR) {
  auto m = m_map_degree2(5);
  std::vector<QVector> xs;
  for (std::size_t i = 0; i < 5; ++i) xs.push_back(unit_vector(5, i));
  auto s = star(m, xs);
  EXPECT_FALSE(is_zero(s));
  EXPECT_TRUE(compute_R(5).contains(s));
  xs[2] = xs[1];
  EXPECT_TRUE(in_R(m, star(m, xs)));
}

TEST(Star, RandomInputsLieInR) {
  std::mt19937 rng(12345);
  for (std::size_t r = 3; r <= 5; ++r) {
    auto m = m_map_degree2(r);
    const int trials = r == 5 ? 40 : 80;
    for (int t = 0; t < trials; ++t) {
      std::vector<QVector> xs;
      for (int k = 0; k < 5; ++k) xs.push_back(random_vector(rng, r));
      ASSERT_TRUE(in_R(m, star(m, xs))) << "r=" << r << " trial " << t;
    }
  }
}

TEST(Star, ImageSpansR) {
  for (std::size_t r = 3; r <= 4; ++r) {
    auto m = m_map_degree2(r);
    std::vector<QVector> images;
    for (std::size_t code = 0; code < r * r * r * r * r; ++code) {
      std::size_t c = code;
      std::vector<QVector> xs;
      for (int k = 0; k < 5; ++k, c /= r) xs.push_back(unit_vector(r, c % r));
      auto s = star(m, xs);
      if (!is_zero(s)) images.push_back(std::move(s));
    }
    EXPECT_EQ(SubspaceBasis::span(m.domain.size(), images).dim(), compute_R(r).dim()) << r;
  }
}

TEST(GradedM, CompositionIdentity) {
  GradedBasis h{{2, 2, 3, 4, 5}, {"a", "b", "c", "d", "e"}};
  auto m = graded_m_map(h, 14);
  auto idj = id_j(m);
  EXPECT_EQ(s_id(m, idj) * idj.matrix, m.matrix);
  EXPECT_TRUE(kernel_basis(idj.matrix).empty());
}

TEST(GradedM, EmptyAndDegreeTen) {
  EXPECT_EQ(graded_m_map(GradedBasis{}).matrix.cols(), 0u);
  auto full = graded_m_map(GradedBasis::uniform(3, 2));
  GradedBasis h{{2, 2, 2, 5}, {"a", "b", "c", "d"}};
  auto m = graded_m_map(h, 10);
  EXPECT_EQ(m.domain.as_graded().of_degree(10).size(), full.domain.size());
}

TEST(JInclusion, InjectiveAndClassical) {
  auto m = m_map_degree2(3);
  auto j = j_inclusion(m.w, m.lambda_w);
  EXPECT_TRUE(kernel_basis(j.matrix).empty());
  const Word& ab = m.lambda_w.word(0);
  EXPECT_EQ(j.matrix(*j.codomain.locate(ab[0], ab[1]), 0), 1);
  EXPECT_EQ(j.matrix(*j.codomain.locate(ab[1], ab[0]), 0), -1);
}

TEST(Symmetrization, KernelDimensions) {
  auto h = GradedBasis::uniform(3, 2);
  PowerBasis w(h, PowerKind::GradedSymmetric, 2);
  auto s = full_symmetrization(h, w, SubspaceBasis::whole(w.size()));
  EXPECT_EQ(s.domain.size(), 18u);
  EXPECT_EQ(rank(s.matrix), 10u);
  EXPECT_EQ(K_kernel(s).dim(), 8u);

  auto h1 = GradedBasis::uniform(1, 2);
  PowerBasis w1(h1, PowerKind::GradedSymmetric, 2);
  EXPECT_EQ(K_kernel(full_symmetrization(h1, w1, SubspaceBasis::whole(1))).dim(), 0u);
  EXPECT_EQ(K_kernel(full_symmetrization(h, w, SubspaceBasis(w.size()))).dim(), 0u);
}
