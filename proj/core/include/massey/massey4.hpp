#pragma once

// Fourfold Massey products built from a cochain choice, and the ordinary
// elements ⋆(x1..x5) of 𝒟 they are compared against.
//
// Signs follow May's convention ā = (−1)^{1+|a|} a: with a_ii = α(x_i) and
// a_{i,i+1} = (−1)^{1+|x_i|} γ(x_i x_{i+1}), the defining system satisfies
// d a_ij = Σ_k ā_ik a_{k+1,j} and the product is [ā11 a24 + ā12 a34 + ā13 a44].
// For even classes this is ±(α1σ2 + γ12γ34 + σ1α4) with the sign of the middle
// terms of dσ fixed so that they are closed.

#include <array>

#include "massey/invariants.hpp"

namespace massey {

struct MasseyFourfold {
  int degree = 0;
  QVector value;            // a representative class, global coordinates
  SubspaceBasis ambiguity;  // x1·H + H·x4 in the same degree
  std::array<Element, 3> gamma;  // a12, a23, a34
  Element sigma1, sigma2;        // a13, a24
};

// Homogeneous degree of a class vector. Throws DegreeMismatch.
int class_degree(const InvariantContext& ctx, std::span<const Rational> x);
// Product of two class vectors.
QVector cup_classes(const InvariantContext& ctx, std::span<const Rational> x, std::span<const Rational> y);
// The element x·y of W = 𝒢²H.
QVector w_product(const InvariantContext& ctx, std::span<const Rational> x, std::span<const Rational> y);

// Throws NotDefined when a consecutive product is nonzero or a triple product
// does not vanish for the given choice.
MasseyFourfold fourfold_massey(const InvariantContext& ctx, const CochainChoice& c, const std::array<QVector, 4>& x);

struct MasseyTimesFifth {
  MasseyFourfold product;
  QVector value;               // ⟨x1..x4⟩·x5
  bool independent = false;    // the ambiguity is killed by x5
};
MasseyTimesFifth massey_times_fifth(const InvariantContext& ctx, const CochainChoice& c,
                                    const std::array<QVector, 5>& x);

// ⋆(x1..x5) = Σ_cyc x1 ⊗ (x2x3 ∧ x4x5) in the coordinates of ctx.h_lambda_e().
// Throws NotOrdinary unless all cyclic products vanish.
QVector ordinary_element(const InvariantContext& ctx, const std::array<QVector, 5>& x);

struct OrdinaryComparison {
  QVector massey;      // ⟨x1..x4⟩x5
  QVector pentagonal;  // 𝒫(⋆(x1..x5))
  bool equal = false;
};
OrdinaryComparison compare_with_pentagonal(const InvariantContext& ctx, const CochainChoice& c,
                                           const std::array<QVector, 5>& x);

}  // namespace massey
