#pragma once

// Built-in models used by the tests, the acceptance suite and the CLI.

#include <memory>

#include "massey/cohomology.hpp"
#include "massey/dga.hpp"

namespace massey {

// Sullivan model with generators x1..xr (degree 2) and y{i}_{j}, i ≤ j
// (degree 3), d y{i}_{j} = x_i x_j, plus s closed degree-3 generators w1..ws.
std::unique_ptr<SullivanAlgebra> p3_model(int r, int cap = 10);
std::unique_ptr<SullivanAlgebra> p3_model_with_h3(int r, int s, int cap = 10);

// H² = ⟨x, y, z⟩, H⁴ = ⟨t⟩ with x² = y² = z² = t and mixed products zero.
std::unique_ptr<ExplicitAlgebra> example_2_7_algebra();

// The same algebra completed to an 8-dimensional Poincaré algebra. Associativity
// forces x·t = x·y² = 0 and t² = 0, so H⁴ = ⟨t, s⟩ with s·x = x' etc., t·s = v
// and s² = 0; multiplication by s is the Lefschetz isomorphism H² → H⁶.
std::unique_ptr<ExplicitAlgebra> example_2_7_completion();

// The algebra with its differential dropped (checked for commutativity and associativity).
std::unique_ptr<ExplicitAlgebra> formal_model(const ExplicitAlgebra& h);

// H(A) through the top degree of h as an algebra with zero differential. The
// basis of H^k is labelled by the classes, the orientation is carried over.
std::unique_ptr<ExplicitAlgebra> cohomology_algebra(const Cohomology& h);

// Cohomology of the connected sum of r copies of S² × S⁶, as a formal algebra.
std::unique_ptr<ExplicitAlgebra> connected_sum_s2_s6(int r);

// An 8-dimensional Poincaré DGA, 1-connected, with H = H² ⊕ H⁶ ⊕ H⁸ (ranks r, r, 1)
// and trivial products on H², whose pentagonal tensor is nonzero (r ≥ 3).
std::unique_ptr<ExplicitAlgebra> nonformal_witness(int r);

}  // namespace massey
