#include <gtest/gtest.h>

#include "massey/errors.hpp"
#include "massey/invariants.hpp"
#include "massey/models.hpp"

using namespace massey;

namespace {

std::size_t dim_of_degree(const InvariantContext& ctx, int degree) {
  std::size_t n = 0;
  for (std::size_t j = 0; j < ctx.d().dim(); ++j) n += ctx.degree_of_d(j) == degree;
  return n;
}

}  // namespace

TEST(DSpace, P3IsR) {
  auto a = p3_model(3);
  InvariantContext ctx(*a);
  EXPECT_EQ(dim_of_degree(ctx, 10), 6u);
  EXPECT_EQ(ctx.d(), d_space_via_r(ctx));
}

TEST(DSpace, SumOfSquares) {
  auto a = example_2_7_algebra();
  InvariantContext ctx(*a, 10);
  ASSERT_EQ(ctx.d().dim(), 1u);
  EXPECT_EQ(ctx.degree_of_d(0), 10);
  EXPECT_EQ(ctx.d(), d_space_via_r(ctx));

  // Σ_cyc x ⊗ (yz ∧ (y² − z²) − xy ∧ xz), built in H ⊗ 𝒢²𝒢²H and pulled back.
  const ProductStructure& ps = ctx.products();
  const MMap m = graded_m_map(ps.h, ctx.through());
  auto w = [&](std::uint32_t i, std::uint32_t j) {
    QVector v = zeros(m.w.size());
    const Located l = m.w.locate({i, j});
    v[l.index] += l.sign;
    return v;
  };
  auto wedge = [&](const QVector& u, const QVector& v) {
    QVector out = zeros(m.lambda_w.size());
    for (std::size_t s = 0; s < u.size(); ++s)
      for (std::size_t t = 0; t < v.size(); ++t) {
        if (sgn(u[s]) == 0 || sgn(v[t]) == 0) continue;
        const Located l = m.lambda_w.locate({static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(t)});
        if (l.sign) out[l.index] += l.sign * u[s] * v[t];
      }
    return out;
  };
  QVector gen = zeros(m.domain.size());
  for (std::uint32_t x = 0; x < 3; ++x) {
    const std::uint32_t y = (x + 1) % 3, z = (x + 2) % 3;
    QVector sq = w(y, y);
    axpy(sq, Rational(-1), w(z, z));
    QVector l = wedge(w(y, z), sq);
    axpy(l, Rational(-1), wedge(w(x, y), w(x, z)));
    for (std::size_t t = 0; t < l.size(); ++t)
      if (sgn(l[t]) != 0) gen[*m.domain.locate(x, t)] += l[t];
  }
  EXPECT_FALSE(is_zero(gen));
  EXPECT_TRUE(is_zero(m.matrix.apply(gen)));
  const QMatrix inc = h_lambda_e_inclusion(ctx, m);
  EXPECT_EQ(image_basis(inc * ctx.d().as_columns()),
            SubspaceBasis::span(m.domain.size(), {gen}));
}

TEST(DSpace, ZeroAlgebra) {
  ExplicitAlgebra a("zero", 4, {{"1"}, {}, {}, {}, {}}, {}, {});
  InvariantContext ctx(a);
  EXPECT_EQ(ctx.d().dim(), 0u);
  EXPECT_EQ(ctx.k().dim(), 0u);
}

TEST(Pentagonal, P3Rank6) {
  auto a = p3_model(3);
  InvariantContext ctx(*a);
  const auto c = canonical_choice(ctx.cohomology(), ctx.products());
  const auto p = pentagonal(ctx, c);
  EXPECT_EQ(rank(p.matrix), 6u);
  // The degree-10 block of the general tensor is the classical construction.
  EXPECT_EQ(pentagonal_degree10(ctx, c), p.matrix);
  // Independent of the choice when H³ = 0.
  for (unsigned seed = 1; seed <= 5; ++seed) {
    const auto c2 = random_choice(ctx.cohomology(), ctx.products(), c, seed);
    validate_choice(ctx.cohomology(), ctx.products(), c2);
    EXPECT_EQ(pentagonal(ctx, c2).matrix, p.matrix) << seed;
  }
}

TEST(Pentagonal, FormalModelsVanish) {
  std::vector<std::unique_ptr<ExplicitAlgebra>> models;
  models.push_back(example_2_7_completion());
  models.push_back(connected_sum_s2_s6(3));
  for (const auto& a : models) {
    InvariantContext ctx(*a);
    const auto c = canonical_choice(ctx.cohomology(), ctx.products());
    EXPECT_TRUE(uniform_triple(ctx, c).is_zero());
    EXPECT_TRUE(bianchi_massey(ctx, c).is_zero());
    EXPECT_TRUE(pentagonal(ctx, c).is_zero());
    EXPECT_TRUE(is_zero(canonical_element(ctx, pentagonal(ctx, c))));
  }
}

TEST(Pentagonal, Witness) {
  auto a = nonformal_witness(3);
  InvariantContext ctx(*a);
  const auto c = canonical_choice(ctx.cohomology(), ctx.products());
  EXPECT_TRUE(uniform_triple(ctx, c).is_zero());
  EXPECT_TRUE(bianchi_massey(ctx, c).is_zero());
  const auto p = pentagonal(ctx, c);
  EXPECT_FALSE(p.is_zero());
  const QVector bar = canonical_element(ctx, p);
  EXPECT_FALSE(is_zero(bar));
  EXPECT_EQ(canonical_element(ctx, p, QVector{Rational(3)}), scaled(bar, Rational(3)));
  for (unsigned seed = 1; seed <= 3; ++seed) {
    const auto c2 = random_choice(ctx.cohomology(), ctx.products(), c, seed);
    validate_choice(ctx.cohomology(), ctx.products(), c2);
    EXPECT_EQ(pentagonal(ctx, c2).matrix, p.matrix);
  }
}

TEST(Pentagonal, MissingOrientation) {
  auto a = p3_model(3);
  InvariantContext ctx(*a);
  const auto c = canonical_choice(ctx.cohomology(), ctx.products());
  EXPECT_THROW(canonical_element(ctx, pentagonal(ctx, c)), MissingOrientation);
}

namespace {

// Random choice whose γ is also shifted by closed multiples of the extra degree-3 generators.
CochainChoice shifted_choice(const InvariantContext& ctx, const CochainChoice& c, unsigned seed) {
  return random_choice(ctx.cohomology(), ctx.products(), c, seed);
}

}  // namespace

TEST(Transformation, TripleAndPentagonalLaws) {
  auto a = p3_model_with_h3(3, 1);
  InvariantContext ctx(*a);
  ASSERT_EQ(ctx.cohomology().betti(3), 1u);
  const auto c = canonical_choice(ctx.cohomology(), ctx.products());
  for (unsigned seed = 1; seed <= 10; ++seed) {
    const auto c1 = shifted_choice(ctx, c, seed);
    const auto c2 = shifted_choice(ctx, c, 100 + seed);
    validate_choice(ctx.cohomology(), ctx.products(), c1);
    const auto rep = verify_transformation(ctx, c1, c2);
    EXPECT_TRUE(rep.triple_law) << seed;
    EXPECT_TRUE(rep.pentagonal_law) << seed;
    EXPECT_TRUE(rep.additivity) << seed;
  }
  const auto same = verify_transformation(ctx, c, c);
  EXPECT_TRUE(same.lhs.is_zero());
  EXPECT_TRUE(same.rhs.is_zero());
}

TEST(Transformation, EtaShiftGivesClassOfEta) {
  auto a = p3_model_with_h3(3, 1);
  InvariantContext ctx(*a);
  const auto c = canonical_choice(ctx.cohomology(), ctx.products());
  const auto c2 = random_choice(ctx.cohomology(), ctx.products(), c, 7, true);
  const auto d = choice_delta(ctx, c2, c);
  for (std::size_t j = 0; j < c.gamma.size(); ++j)
    EXPECT_EQ(d.delta.column(j), closed_class(ctx, c2.gamma[j] - c.gamma[j], "η"));
  EXPECT_TRUE(choice_delta(ctx, c, c).delta.is_zero());
}

TEST(Transformation, DeltaIsAdditiveModuloL1) {
  auto a = p3_model_with_h3(3, 1);
  InvariantContext ctx(*a);
  const auto c = canonical_choice(ctx.cohomology(), ctx.products());
  const auto c1 = random_choice(ctx.cohomology(), ctx.products(), c, 3);
  const auto c2 = random_choice(ctx.cohomology(), ctx.products(), c1, 4);
  const QMatrix sum = choice_delta(ctx, c2, c1).delta + choice_delta(ctx, c1, c).delta;
  const QMatrix direct = choice_delta(ctx, c2, c).delta;
  EXPECT_TRUE(l1_subspace(ctx).contains(flatten(sum - direct)));
}

TEST(Triple, TripleLawAndVanishingChoice) {
  auto a = p3_model_with_h3(3, 1);
  InvariantContext ctx(*a);
  const auto c = canonical_choice(ctx.cohomology(), ctx.products());
  const auto f = bianchi_massey(ctx, c);
  for (unsigned seed = 1; seed <= 3; ++seed)
    EXPECT_EQ(bianchi_massey(ctx, random_choice(ctx.cohomology(), ctx.products(), c, seed)).matrix, f.matrix);
  const auto v = find_vanishing_triple_choice(ctx, c);
  if (v) {
    validate_choice(ctx.cohomology(), ctx.products(), *v);
    EXPECT_TRUE(uniform_triple(ctx, *v).is_zero());
    EXPECT_TRUE(f.is_zero());
  }
}

TEST(Triple, ZeroDifferentialIsTrivial) {
  auto a = connected_sum_s2_s6(2);
  InvariantContext ctx(*a);
  const auto c = canonical_choice(ctx.cohomology(), ctx.products());
  const auto v = find_vanishing_triple_choice(ctx, c);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->gamma, c.gamma);
  EXPECT_TRUE(delta_subspace(ctx, c).empty());
}

TEST(Delta, IndependentOfChoice) {
  auto a = p3_model_with_h3(3, 1);
  InvariantContext ctx(*a);
  const auto c = canonical_choice(ctx.cohomology(), ctx.products());
  const auto d0 = delta_subspace(ctx, c);
  EXPECT_EQ(delta_subspace(ctx, random_choice(ctx.cohomology(), ctx.products(), c, 11)), d0);
  auto p3 = p3_model(3);
  InvariantContext plain(*p3);
  // No degree −1 maps E⁴ → H³: the degree-8 part of the theory has no choices.
  for (const auto& [cls, e] : plain.l2_index()) EXPECT_NE(plain.products().e_basis.degrees[e], 4);
  EXPECT_TRUE(delta_subspace(plain, canonical_choice(plain.cohomology(), plain.products())).empty());
}

TEST(Delta, MatrixMatchesDirectEvaluation) {
  auto a = p3_model_with_h3(3, 1);
  InvariantContext ctx(*a);
  const auto c = random_choice(ctx.cohomology(), ctx.products(), canonical_choice(ctx.cohomology(), ctx.products()), 5);
  const auto t = uniform_triple(ctx, c);
  const QMatrix phi = triple_delta_matrix(ctx, t);
  QVector x = zeros(ctx.l2_index().size());
  for (std::size_t u = 0; u < x.size(); ++u) x[u] = Rational(static_cast<long>(u % 7) - 3, 1 + static_cast<long>(u % 3));
  EXPECT_EQ(phi.apply(x), flatten(triple_delta_on_d(ctx, t, ctx.l2_map(x))));
}
