#include <gtest/gtest.h>

#include "massey/choice.hpp"
#include "massey/models.hpp"

using namespace massey;

TEST(Sullivan, MonomialCounts) {
  auto p3 = p3_model(3);
  EXPECT_EQ(p3->dim(0), 1u);
  EXPECT_EQ(p3->dim(4), 6u);
  EXPECT_EQ(p3->dim(8), 60u);
  EXPECT_EQ(p3->labels(0)[0], "1");
  EXPECT_THROW(p3->dim(11), DegreeCapExceeded);
}

TEST(Sullivan, ProductsAndSigns) {
  auto a = p3_model(3);
  const auto y12 = a->generator(*a->generator_index("y1_2"));
  const auto y13 = a->generator(*a->generator_index("y1_3"));
  const auto x1 = a->generator(0);
  EXPECT_TRUE(a->multiply(y12, y12).is_zero());
  EXPECT_EQ(a->multiply(y12, y13), Rational(-1) * a->multiply(y13, y12));
  EXPECT_EQ(a->multiply(x1, y12), a->multiply(y12, x1));
  EXPECT_THROW(a->multiply(a->multiply(y12, y13), a->multiply(y12, x1)), DegreeCapExceeded);
}

TEST(Sullivan, Differential) {
  auto a = p3_model(3);
  const auto y12 = a->generator(*a->generator_index("y1_2"));
  const auto x1 = a->generator(0), x2 = a->generator(1), x3 = a->generator(2);
  EXPECT_EQ(a->differential(y12), a->multiply(x1, x2));
  EXPECT_EQ(a->differential(a->multiply(x3, y12)), a->multiply(x3, a->multiply(x1, x2)));
  EXPECT_TRUE(a->differential(a->unit()).is_zero());
  check_structure(*a, 7);
}

TEST(Sullivan, RejectsBadDifferentials) {
  std::vector<Generator> gens{{"x", 2}, {"y", 3}};
  EXPECT_THROW(SullivanAlgebra("bad", gens, {{}, {{Rational(1), {0, 0, 0}}}}, 8), DegreeMismatch);
  // d z = x y with d y = x²: d² z = x³ ≠ 0.
  EXPECT_THROW(SullivanAlgebra("bad", {{"x", 2}, {"y", 3}, {"z", 4}},
                               {{}, {{Rational(1), {0, 0}}}, {{Rational(1), {0, 1}}}}, 8),
               NotASquareZeroDifferential);
}

TEST(Cohomology, P3Betti) {
  auto a = p3_model(3);
  Cohomology h(*a);
  EXPECT_EQ(h.betti(2), 3u);
  EXPECT_EQ(h.betti(3), 0u);
  EXPECT_EQ(h.betti(4), 0u);
  EXPECT_EQ(h.betti(5), 8u);
  EXPECT_EQ(h.betti(8), 6u);
  EXPECT_EQ(h.basis().labels[0], "h2_0");
  for (std::size_t i = 0; i < h.size(); ++i) {
    EXPECT_TRUE(h.is_closed(h.representative(i)));
    EXPECT_EQ(h.global_class_of(h.representative(i)), unit_vector(h.size(), i));
  }
  // The section on H² is forced: the cocycles in degree 2 are exactly V².
  EXPECT_EQ(kernel_basis(a->d_matrix(2)).dim(), 3u);
  EXPECT_EQ(kernel_basis(a->d_matrix(3)).dim(), 0u);
}

TEST(Cohomology, ZeroDifferentialIsItself) {
  auto a = connected_sum_s2_s6(2);
  Cohomology h(*a);
  EXPECT_EQ(h.betti(2), 2u);
  EXPECT_EQ(h.betti(6), 2u);
  EXPECT_EQ(h.betti(8), 1u);
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Element& rep = h.representative(i);
    EXPECT_EQ(std::count_if(rep.coeffs.begin(), rep.coeffs.end(), [](const Rational& x) { return sgn(x) != 0; }), 1);
  }
}

TEST(Cohomology, CupProducts) {
  auto a = p3_model(3);
  Cohomology h(*a);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_TRUE(is_zero(h.cup(i, j)));

  auto e = example_2_7_algebra();
  Cohomology he(*e);
  QVector t = unit_vector(he.size(), 3);
  EXPECT_EQ(he.cup(0, 0), t);
  EXPECT_TRUE(is_zero(he.cup(0, 1)));
  EXPECT_EQ(he.global_class_of(he.dga().multiply(he.dga().unit(), he.representative(1))), unit_vector(he.size(), 1));
}

TEST(Choice, EKernels) {
  auto a = p3_model(3);
  Cohomology h(*a);
  auto ps = product_structure(h);
  EXPECT_EQ(ps.e_basis.of_degree(4).size(), 6u);
  EXPECT_EQ(ps.w.as_graded().of_degree(4).size(), 6u);

  auto e = example_2_7_algebra();
  Cohomology he(*e);
  EXPECT_EQ(product_structure(he).e.dim(), 5u);

  auto z = connected_sum_s2_s6(3);
  Cohomology hz(*z);
  auto pz = product_structure(hz);
  // Products H²·H² vanish, H²·H⁶ hits the top class.
  EXPECT_EQ(pz.e_basis.of_degree(4).size(), 6u);
  EXPECT_EQ(pz.e_basis.of_degree(8).size(), 8u);
}

TEST(Choice, P3GammaIsInverseOfD) {
  auto a = p3_model(3);
  Cohomology h(*a);
  auto ps = product_structure(h);
  auto c = canonical_choice(h, ps);
  validate_choice(h, ps, c);
  for (std::size_t j = 0; j < ps.e.dim(); ++j) {
    if (ps.e_basis.degrees[j] != 4) continue;
    // γ(x_i x_j) is a degree-3 element, and degree 3 has no cocycles.
    EXPECT_EQ(c.gamma[j].degree, 3);
    EXPECT_FALSE(c.gamma[j].is_zero());
  }
  EXPECT_EQ(c.gamma[0], a->generator(*a->generator_index("y1_1")));
}

TEST(Choice, ZeroDifferentialGivesZeroGamma) {
  auto a = connected_sum_s2_s6(3);
  Cohomology h(*a);
  auto ps = product_structure(h);
  auto c = canonical_choice(h, ps);
  for (const auto& g : c.gamma) EXPECT_TRUE(g.is_zero());
}

TEST(Choice, PerturbedChoicesAreValid) {
  auto a = p3_model_with_h3(3, 1);
  Cohomology h(*a);
  EXPECT_EQ(h.betti(3), 1u);
  auto ps = product_structure(h);
  auto c = canonical_choice(h, ps);
  for (unsigned seed = 1; seed <= 5; ++seed) {
    auto c2 = random_choice(h, ps, c, seed);
    EXPECT_NO_THROW(validate_choice(h, ps, c2)) << seed;
  }
}

TEST(Explicit, RejectsBrokenStructure) {
  std::vector<std::vector<std::string>> basis{{"1"}, {}, {"x", "y"}, {}, {"t", "u"}};
  std::vector<ExplicitAlgebra::ProductRule> rules{{2, 0, 2, 1, {{0, 1}}}, {2, 1, 2, 0, {{1, 1}}}};
  EXPECT_THROW(ExplicitAlgebra("bad", 4, basis, rules, {}), StructureCheckFailed);
  std::vector<QMatrix> d{QMatrix(), QMatrix(), QMatrix(1, 2)};
  EXPECT_THROW(ExplicitAlgebra("bad", 4, {{"1"}, {}, {"x", "y"}, {"a", "b"}, {"t", "u"}}, {}, d),
               DegreeMismatch);
}

TEST(Witness, IsPoincareLike) {
  auto a = nonformal_witness(3);
  Cohomology h(*a);
  EXPECT_EQ(h.betti(2), 3u);
  EXPECT_EQ(h.betti(3), 0u);
  EXPECT_EQ(h.betti(4), 0u);
  EXPECT_EQ(h.betti(5), 0u);
  EXPECT_EQ(h.betti(6), 3u);
  EXPECT_EQ(h.betti(8), 1u);
}

TEST(MapCalculus, AlphaAlphaIsTwiceAlphaSquared) {
  auto a = connected_sum_s2_s6(3);
  Cohomology h(*a);
  std::vector<Element> reps;
  for (std::size_t i = 0; i < h.size(); ++i) reps.push_back(h.representative(i));
  auto alpha = linear_map(h.basis(), 0, reps);
  auto aa = map_sym_product(*a, alpha, alpha, 8);
  auto a2 = map_power(*a, alpha, 2, 8);
  ASSERT_EQ(aa.values.size(), a2.values.size());
  for (std::size_t i = 0; i < aa.values.size(); ++i) EXPECT_EQ(aa.values[i], Rational(2) * a2.values[i]);
}

namespace {

// A map on the degree-2 and degree-3 generators of a P3-type model, values built from seed.
AlgebraMap sample_map(const SullivanAlgebra& a, const GradedBasis& v, int shift, int seed) {
  std::vector<Element> values;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Element e = a.zero(v.degrees[i] + shift);
    for (std::size_t t = 0; t < e.coeffs.size(); ++t) e.coeffs[t] = static_cast<long>((seed * 7 + i * 3 + t * 5) % 5) - 2;
    values.push_back(std::move(e));
  }
  return linear_map(v, shift, values);
}

}  // namespace

TEST(MapCalculus, ProductIdentities) {
  auto a = p3_model(2, 10);
  GradedBasis v{{2, 3, 2}, {"a", "b", "c"}};
  auto f = sample_map(*a, v, 0, 1);
  auto g = sample_map(*a, v, 1, 2);
  auto k = sample_map(*a, v, -1, 3);
  const int bound = 7;
  // Associativity and graded commutativity.
  auto fg_k = map_sym_product(*a, map_sym_product(*a, f, g, bound), k, bound);
  auto f_gk = map_sym_product(*a, f, map_sym_product(*a, g, k, bound), bound);
  EXPECT_TRUE(fg_k == f_gk);
  auto gk = map_sym_product(*a, g, k, bound);
  auto kg = map_sym_product(*a, k, g, bound);
  for (std::size_t i = 0; i < gk.values.size(); ++i) EXPECT_EQ(gk.values[i], Rational(-1) * kg.values[i]);
  // Leibniz: d(fg) = (df)g + (−1)^r f(dg).
  auto lhs = map_differential(*a, map_sym_product(*a, f, g, bound));
  auto rhs = map_add(map_sym_product(*a, map_differential(*a, f), g, bound),
                     map_sym_product(*a, f, map_differential(*a, g), bound));
  EXPECT_TRUE(lhs == rhs);
  auto lhs2 = map_differential(*a, map_sym_product(*a, g, f, bound));
  auto rhs2 = map_add(map_sym_product(*a, map_differential(*a, g), f, bound),
                      map_sym_product(*a, g, map_differential(*a, f), bound), -1);
  EXPECT_TRUE(lhs2 == rhs2);
}

TEST(MapCalculus, AltProductCommutativity) {
  auto a = p3_model(2, 10);
  GradedBasis v{{2, 3, 2}, {"a", "b", "c"}};
  auto f = sample_map(*a, v, 1, 4);
  auto g = sample_map(*a, v, -1, 5);
  auto fg = map_alt_product(*a, f, g, 7);
  auto gf = map_alt_product(*a, g, f, 7);
  // p = q = 1, r = 1, s = −1: f∧g = (−1)^{1+(−1)} g∧f = g∧f.
  for (std::size_t i = 0; i < fg.values.size(); ++i) EXPECT_EQ(fg.values[i], gf.values[i]);
  // γ∧γ = 2γ² for an odd map.
  auto gg = map_alt_product(*a, g, g, 7);
  auto g2 = map_power(*a, g, 2, 7);
  for (std::size_t i = 0; i < gg.values.size(); ++i) EXPECT_EQ(gg.values[i], Rational(2) * g2.values[i]);
  // Polarisation for even maps of degree 0 on degree-2 letters.
  auto e = sample_map(*a, v, 0, 6);
  auto ee = map_sym_product(*a, e, e, 7);
  const Located loc = ee.domain.locate({0, 2});
  EXPECT_EQ(ee.values[loc.index], Rational(2) * a->multiply(e.values[0], e.values[2]));
}
