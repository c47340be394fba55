#pragma once

// Cohomology-level product data and cochain choices c = (α, γ) with dγ = α²|_E.

#include <optional>
#include <vector>

#include "massey/cohomology.hpp"
#include "massey/map_calculus.hpp"

namespace massey {

// H, the graded symmetric square W = 𝒢²H (degrees ≤ top unless a larger bound
// is given, which explicit algebras allow), the product W → H and its kernel E.
struct ProductStructure {
  GradedBasis h;
  PowerBasis w;
  QMatrix product;
  SubspaceBasis e;
  GradedBasis e_basis;
  // Columns are the E basis vectors in W coordinates.
  QMatrix e_inclusion;
};

ProductStructure product_structure(const Cohomology& h, std::optional<int> w_bound = {});
SubspaceBasis e_kernel(const Cohomology& h);

struct CochainChoice {
  std::vector<Element> alpha;  // one cocycle per class of H
  std::vector<Element> gamma;  // one cochain per basis vector of E
};

// α(x1)α(x2) extended linearly to a vector of W.
Element alpha_squared(const Dga& a, const ProductStructure& ps, const std::vector<Element>& alpha,
                      const QVector& w_vector, int degree);

// γ(e) = a primitive of α²(e) (free variables zero). Throws InternalInconsistency.
std::vector<Element> prederivative_gamma(const Cohomology& h, const ProductStructure& ps,
                                         const std::vector<Element>& alpha);

// α = the section of the cohomology computation, γ its prederivative.
CochainChoice canonical_choice(const Cohomology& h, const ProductStructure& ps);

// Throws InternalInconsistency unless α is a closed right inverse of the
// projection and dγ = α²|_E.
void validate_choice(const Cohomology& h, const ProductStructure& ps, const CochainChoice& c);

// The choice (α + dβ, γ + β(α + ½dβ)|_E + η) for β : H → A^{*−1} and closed η : E → Z^{*−1}.
CochainChoice perturb_choice(const Cohomology& h, const ProductStructure& ps, const CochainChoice& c,
                             const std::vector<Element>& beta, const std::vector<Element>& eta);

// Deterministic pseudo-random β and closed η for the given seed; eta_only
// keeps β = 0.
CochainChoice random_choice(const Cohomology& h, const ProductStructure& ps, const CochainChoice& c,
                            unsigned seed, bool eta_only = false);

// The map E → A given by applying a W-map to the E basis vectors.
std::vector<Element> restrict_to_e(const Dga& a, const ProductStructure& ps, const AlgebraMap& on_w);

}  // namespace massey
