#include <gtest/gtest.h>

#include "massey/errors.hpp"
#include "massey/models.hpp"
#include "massey/morphism.hpp"

using namespace massey;

namespace {

std::size_t gen(const SullivanAlgebra& a, const std::string& name) { return *a.generator_index(name); }

std::string y_name(int i, int j) {
  if (i > j) std::swap(i, j);
  return "y" + std::to_string(i) + "_" + std::to_string(j);
}

// x_i ↦ s·x_{σ(i)}, y_ij ↦ s²·y_{σ(i)σ(j)}, extra degree-3 generators fixed.
Morphism relabel(const SullivanAlgebra& a, int r, const std::vector<int>& sigma, const Rational& s) {
  std::vector<Element> images;
  for (std::size_t g = 0; g < a.generators().size(); ++g) images.push_back(a.generator(g));
  for (int i = 1; i <= r; ++i) {
    images[gen(a, "x" + std::to_string(i))] = s * a.generator(gen(a, "x" + std::to_string(sigma[i - 1])));
    for (int j = i; j <= r; ++j)
      images[gen(a, y_name(i, j))] = (s * s) * a.generator(gen(a, y_name(sigma[i - 1], sigma[j - 1])));
  }
  return Morphism(a, a, std::move(images));
}

}  // namespace

TEST(Morphism, IdentityInducesIdentity) {
  auto a = p3_model_with_h3(3, 1);
  Cohomology h(*a);
  const Morphism id = Morphism::identity(*a);
  EXPECT_EQ(induced_cohomology_map(id, h, h), QMatrix::identity(h.size()));
  const Element e = a->monomial({gen(*a, "x1"), gen(*a, "y1_2")});
  EXPECT_EQ(apply_morphism(id, e), e);
}

TEST(Morphism, PermutationActsOnH2) {
  auto a = p3_model(3);
  Cohomology h(*a);
  const Morphism f = relabel(*a, 3, {2, 3, 1}, Rational(1));
  const QMatrix hf = induced_cohomology_map(f, h, h);
  // x_i ↦ x_{σ(i)} in the basis of H².
  for (int i = 1; i <= 3; ++i) {
    const int j = i % 3 + 1;
    const QVector xi = h.global_class_of(a->generator(gen(*a, "x" + std::to_string(i))));
    const QVector xj = h.global_class_of(a->generator(gen(*a, "x" + std::to_string(j))));
    EXPECT_EQ(hf.apply(xi), xj);
  }
  // An algebra map: f(ab) = f(a)f(b).
  const Element u = a->monomial({gen(*a, "x1"), gen(*a, "y2_3")});
  const Element v = a->monomial({gen(*a, "y1_1"), gen(*a, "x2")});
  EXPECT_EQ(f.apply(a->multiply(u, v)), a->multiply(f.apply(u), f.apply(v)));
}

TEST(Morphism, ZeroMapKillsCohomology) {
  auto a = p3_model(2);
  Cohomology h(*a);
  std::vector<Element> images;
  for (const auto& g : a->generators()) images.push_back(a->zero(g.degree));
  const Morphism f(*a, *a, images);
  EXPECT_TRUE(induced_cohomology_map(f, h, h).is_zero());
  InvariantContext ctx(*a);
  EXPECT_THROW(transport_choice(f, ctx, ctx, canonical_choice(ctx.cohomology(), ctx.products())), NotAnIsomorphism);
}

TEST(Morphism, Rejected) {
  auto a = p3_model(2);
  std::vector<Element> images;
  for (std::size_t g = 0; g < a->generators().size(); ++g) images.push_back(a->generator(g));
  auto swapped = images;
  swapped[gen(*a, "x1")] = a->generator(gen(*a, "x2"));
  EXPECT_THROW(Morphism(*a, *a, swapped), NotAMorphism);
  auto wrong_degree = images;
  wrong_degree[gen(*a, "y1_1")] = a->generator(gen(*a, "x1"));
  EXPECT_THROW(Morphism(*a, *a, wrong_degree), NotAMorphism);
  images.pop_back();
  EXPECT_THROW(Morphism(*a, *a, images), NotAMorphism);
}

TEST(Naturality, TransportedChoiceCommutes) {
  for (int with_h3 = 0; with_h3 <= 1; ++with_h3) {
    auto a = with_h3 ? p3_model_with_h3(3, 1) : p3_model(3);
    InvariantContext ctx(*a);
    const auto c = random_choice(ctx.cohomology(), ctx.products(),
                                 canonical_choice(ctx.cohomology(), ctx.products()), 9);
    const Morphism f = relabel(*a, 3, {3, 1, 2}, Rational(2));
    const QMatrix hf = induced_cohomology_map(f, ctx.cohomology(), ctx.cohomology());
    const auto cb = transport_choice(f, ctx, ctx, c);
    validate_choice(ctx.cohomology(), ctx.products(), cb);

    const auto ta = uniform_triple(ctx, c), tb = uniform_triple(ctx, cb);
    EXPECT_EQ(hf * ta.matrix, tb.matrix * induced_on_k(ctx, ctx, hf)) << with_h3;
    const auto pa = pentagonal(ctx, c), pb = pentagonal(ctx, cb);
    EXPECT_EQ(hf * pa.matrix, pb.matrix * induced_on_d(ctx, ctx, hf)) << with_h3;
    EXPECT_FALSE(pa.is_zero());
  }
}
