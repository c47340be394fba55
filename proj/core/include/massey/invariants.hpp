#pragma once

// Obstruction tensors of a DGA: the uniform triple product 𝒯_c on K[H ⊗ E],
// the Bianchi–Massey tensor ℱ on ℬ = K[𝒢²E], the pentagonal tensor 𝒫_c on 𝒟,
// the transformation laws relating different cochain choices and the Δ
// ambiguity of 𝒫 under intertwining.
//
// Maps out of H-valued spaces are matrices whose rows are the classes of H
// (global coordinates) and whose columns are a basis of the domain subspace.

#include <optional>
#include <string>
#include <vector>

#include "massey/choice.hpp"
#include "massey/multilinear.hpp"

namespace massey {

// Everything that depends only on the cohomology algebra. Spaces are built
// through degree `through` for 𝒟 (default top+2, where 𝒫 can still be
// nonzero), through−1 for K and ℬ and through−2 for W. Explicit algebras may
// go higher since their cohomology vanishes above the cap.
class InvariantContext {
 public:
  explicit InvariantContext(const Dga& a, std::optional<int> through = {});
  InvariantContext(const InvariantContext&) = delete;
  InvariantContext& operator=(const InvariantContext&) = delete;

  const Dga& dga() const { return h_.dga(); }
  const Cohomology& cohomology() const { return h_; }
  const ProductStructure& products() const { return ps_; }
  int top() const { return h_.top(); }
  int through() const { return through_; }

  // H ⊗ E (degrees ≤ through−1), the full symmetrisation into 𝒢³H and its kernel K.
  const Symmetrization& symmetrization() const { return sym_; }
  const PairBasis& h_e() const { return sym_.domain; }
  const SubspaceBasis& k() const { return k_; }

  // 𝒢²E (degrees ≤ through−1) and ℬ = K[𝒢²E].
  const PowerBasis& sym_e() const { return sym_e_; }
  const SubspaceBasis& b() const { return b_; }

  // H ⊗ Λ²E (degrees ≤ through), 𝒟 inside it, and Id ⊗ j into (H ⊗ E) ⊗ E.
  const PowerBasis& lambda_e() const { return lambda_e_; }
  const PairBasis& h_lambda_e() const { return h_lambda_e_; }
  const SubspaceBasis& d() const { return d_; }
  const PairBasis& h_e_e() const { return h_e_e_; }
  const QMatrix& id_j() const { return id_j_; }

  // Cup product of two classes, zero above top.
  QVector cup(std::size_t a, std::size_t b) const;
  int degree_of_k(std::size_t i) const;
  int degree_of_d(std::size_t i) const;

  // The degree −1 maps E → H^{*−1} (the space L₂), indexed by pairs
  // (class, E basis vector) of matching degree.
  const std::vector<std::pair<std::size_t, std::size_t>>& l2_index() const { return l2_; }
  QMatrix l2_map(std::span<const Rational> coords) const;

 private:
  Cohomology h_;
  int through_;
  ProductStructure ps_;
  Symmetrization sym_;
  SubspaceBasis k_;
  PowerBasis sym_e_;
  SubspaceBasis b_;
  PowerBasis lambda_e_;
  PairBasis h_lambda_e_;
  SubspaceBasis d_;
  PairBasis h_e_e_;
  QMatrix id_j_;
  std::vector<std::pair<std::size_t, std::size_t>> l2_;
};

struct ObstructionTensor {
  std::string name;
  int shift = 0;              // degree of the map
  SubspaceBasis domain;       // inside the ambient power space
  std::vector<int> degrees;   // degree of each domain basis vector
  QMatrix matrix;             // classes of H × domain basis

  bool is_zero() const { return matrix.is_zero(); }
};

// The class of a closed element, or InternalInconsistency if it is not closed.
QVector closed_class(const InvariantContext& ctx, const Element& z, const std::string& what);

// αγ on an element of H ⊗ E.
Element triple_cochain(const InvariantContext& ctx, const CochainChoice& c, std::span<const Rational> v, int degree);
// αγ² on an element of H ⊗ Λ²E.
Element pentagonal_cochain(const InvariantContext& ctx, const CochainChoice& c, std::span<const Rational> v,
                           int degree);

ObstructionTensor uniform_triple(const InvariantContext& ctx, const CochainChoice& c);
ObstructionTensor bianchi_massey(const InvariantContext& ctx, const CochainChoice& c);
ObstructionTensor pentagonal(const InvariantContext& ctx, const CochainChoice& c);

// The classical construction on H² ⊗ Λ²E⁴ (the degree-10 part of 𝒟):
// q ⊗ (e ∧ e') ↦ [α(q)γ(e)γ(e')]. Columns are the degree-10 basis vectors of 𝒟.
QMatrix pentagonal_degree10(const InvariantContext& ctx, const CochainChoice& c);

// 𝒟 computed from scratch as (H ⊗ Λ²E) ∩ R(H) with R(H) = ker 𝔪 on H ⊗ 𝒢²𝒢²H.
SubspaceBasis d_space_via_r(const InvariantContext& ctx);
// H ⊗ Λ²E → H ⊗ 𝒢²𝒢²H, into the domain of m (built through ctx.through()).
QMatrix h_lambda_e_inclusion(const InvariantContext& ctx, const MMap& m);

struct ChoiceDelta {
  QMatrix delta;              // classes × E basis, degree −1
  std::vector<Element> beta;  // dβ = α' − α
};

ChoiceDelta choice_delta(const InvariantContext& ctx, const CochainChoice& c_new, const CochainChoice& c_old);

// Id·L₁: the maps (ζ·Id)|_E for degree −1 maps ζ : H → H, flattened row-major.
SubspaceBasis l1_subspace(const InvariantContext& ctx);
QVector flatten(const QMatrix& m);

// (Id δ)|_K, (Id δ²) on 𝒟 and (𝒯 δ)∘(Id j) on 𝒟.
QMatrix id_delta_on_k(const InvariantContext& ctx, const QMatrix& delta);
QMatrix id_delta_squared_on_d(const InvariantContext& ctx, const QMatrix& delta);
QMatrix triple_delta_on_d(const InvariantContext& ctx, const ObstructionTensor& t, const QMatrix& delta);

struct TransformationReport {
  bool triple_law = false;      // 𝒯_{c'} − 𝒯_c = Id δ on K
  bool pentagonal_law = false;  // 𝒫_{c'} − 𝒫_c = (𝒯_c δ)(Id j) + Id δ²
  bool additivity = false;      // (𝒯_c − 𝒯_{c'} + Id δ)ε ∘ (Id j) = 0
  QMatrix lhs, rhs;
};
TransformationReport verify_transformation(const InvariantContext& ctx, const CochainChoice& c,
                                           const CochainChoice& c_new);

// c' = (α, γ + η) with 𝒯_{c'} = 0, where η = α∘δ for a solution δ ∈ L₂ of
// 𝒯_c + Id δ|_K = 0; absent when there is none.
std::optional<CochainChoice> find_vanishing_triple_choice(const InvariantContext& ctx, const CochainChoice& c);

// Adds η = α∘δ to γ.
CochainChoice realize_delta(const InvariantContext& ctx, const CochainChoice& c, const QMatrix& delta);

// Δ ⊆ Hom(𝒟, H^{*−2}), maps flattened row-major (class × 𝒟 basis).
SubspaceBasis delta_subspace(const InvariantContext& ctx, const CochainChoice& c);
// The linear map L₂ → Hom(𝒟, H^{*−2}), δ ↦ (𝒯 δ)∘(Id j), in the same flattening.
QMatrix triple_delta_matrix(const InvariantContext& ctx, const ObstructionTensor& t);

struct Discrepancy {
  QMatrix difference;      // F#𝒫_c − 𝒫_b, classes of X × 𝒟_X
  SubspaceBasis delta;     // Δ_X
  QVector reduced;         // difference reduced modulo Δ
  bool zero = false;
  CochainChoice choice_x;  // b
  CochainChoice choice_y;  // c, intertwining 𝒯_b and 𝒯_c
};

// f : H(X) → H(Y) given in global class coordinates (rows Y, columns X).
// Throws NotAnIsomorphism or NoIntertwiningChoices.
Discrepancy pentagonal_discrepancy(const InvariantContext& x, const InvariantContext& y, const QMatrix& f);

// Maps induced by an algebra isomorphism f : H(X) → H(Y).
QMatrix induced_on_e(const InvariantContext& x, const InvariantContext& y, const QMatrix& f);
QMatrix induced_on_k(const InvariantContext& x, const InvariantContext& y, const QMatrix& f);
QMatrix induced_on_d(const InvariantContext& x, const InvariantContext& y, const QMatrix& f);

// ε∘𝒫 for an orientation functional ε on H^m (indexed by the classes of H^m).
QVector canonical_element(const InvariantContext& ctx, const ObstructionTensor& p, std::span<const Rational> functional);
// Same with the functional of the algebra's orientation. Throws MissingOrientation.
QVector canonical_element(const InvariantContext& ctx, const ObstructionTensor& p);
QVector orientation_functional(const Cohomology& h);

}  // namespace massey
