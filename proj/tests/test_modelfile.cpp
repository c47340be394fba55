#include <gtest/gtest.h>

#include "massey/cohomology.hpp"
#include "massey/errors.hpp"
#include "massey/modelfile.hpp"
#include "massey/models.hpp"

using namespace massey;

TEST(ModelFile, RoundTripBuiltins) {
  std::vector<std::unique_ptr<Dga>> models;
  models.push_back(p3_model(3));
  models.push_back(p3_model_with_h3(3, 1));
  models.push_back(example_2_7_algebra());
  models.push_back(example_2_7_completion());
  models.push_back(connected_sum_s2_s6(3));
  models.push_back(nonformal_witness(3));
  models.push_back(formal_model(*example_2_7_completion()));
  for (const auto& a : models) {
    const std::string text = serialize_model(*a);
    const auto b = parse_model(text);
    EXPECT_TRUE(same_model(*a, *b)) << a->name();
    EXPECT_EQ(serialize_model(*b), text) << a->name();
  }
}

TEST(ModelFile, ExportedP3HasB8Six) {
  const auto a = parse_model(serialize_model(*p3_model(3)));
  EXPECT_EQ(Cohomology(*a).betti(8), 6u);
}

TEST(ModelFile, EmptyFileIsTrivial) {
  const auto a = parse_model("");
  EXPECT_EQ(a->cap(), 0);
  EXPECT_EQ(a->dim(0), 1u);
  EXPECT_EQ(Cohomology(*a).size(), 0u);
  EXPECT_NO_THROW(parse_model("# only a comment\n\n"));
}

TEST(ModelFile, KoszulNormalisation) {
  const auto a = parse_model("gen a 3\ngen b 3\ngen c 5\ngen u 4\ndiff c = b*a\ndiff u = -1/2 * c ^ 1 * 0 + a*b*0\n");
  const auto& s = dynamic_cast<const SullivanAlgebra&>(*a);
  const Element ab = s.monomial({0, 1});
  EXPECT_EQ(s.differential(s.generator(2)), Rational(-1) * ab);
  EXPECT_TRUE(s.differential(s.generator(3)).is_zero());
  EXPECT_EQ(parse_element(s, 6, "b*a + 2*a*b"), ab);
}

TEST(ModelFile, Orientation) {
  const auto a = parse_model(
      "name sphere\ncap 4\nbasis 2 x\nbasis 4 v\nproduct x * x = 2*v  # comment\norient 4 1/2*v\n");
  ASSERT_TRUE(a->orientation());
  EXPECT_EQ(a->orientation()->degree, 4);
  EXPECT_EQ(*a->orientation()->fundamental, QVector{Rational(1, 2)});
  EXPECT_EQ(a->name(), "sphere");
  EXPECT_EQ(a->multiply(a->basis_element(2, 0), a->basis_element(2, 0)).coeffs, QVector{Rational(2)});
}

TEST(ModelFile, DMatrix) {
  const auto a = parse_model("basis 1 e\nbasis 2 f\ndmatrix 1\n3\nend\n");
  EXPECT_EQ(a->d_matrix(1)(0, 0), Rational(3));
  EXPECT_EQ(Cohomology(*a).size(), 0u);
}

TEST(ModelFile, Errors) {
  EXPECT_THROW(parse_model("gen x1 2\ngen y 3\ndiff y = x1*x1*x1\n"), DegreeMismatch);
  EXPECT_THROW(parse_model("gen x 2\nfrobnicate\n"), SyntaxError);
  try {
    parse_model("gen x 2\ngen y 3\ndiff y = x * * x\n");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line, 3);
  }
  EXPECT_THROW(parse_model("gen x 2\ndiff z = x\n"), SyntaxError);
  EXPECT_THROW(parse_model("basis 1 a\ndmatrix 1\n"), SyntaxError);
  EXPECT_THROW(parse_model("gen x 2\nbasis 2 y\n"), SyntaxError);
  // d(c) = a·b with d(a) = x, d(b) = 0 gives d²(c) = x·b ≠ 0.
  EXPECT_THROW(parse_model("gen x 2\ngen a 1\ngen b 2\ngen c 2\ndiff a = x\ndiff c = a*b\n"),
               NotASquareZeroDifferential);
  EXPECT_THROW(parse_model("basis 1 e\nbasis 2 f g\nbasis 3 h\ndmatrix 1\n1\n0\nend\ndmatrix 2\n1 0\nend\n"),
               NotASquareZeroDifferential);
}
