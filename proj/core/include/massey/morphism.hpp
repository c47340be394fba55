#pragma once

// DGA morphisms out of a Sullivan algebra, given by the images of the
// generators, and the maps they induce on cohomology and on cochain choices.

#include <vector>

#include "massey/choice.hpp"
#include "massey/invariants.hpp"

namespace massey {

class Morphism {
 public:
  // Throws NotAMorphism if the images have the wrong degrees or d f(g) ≠ f(dg)
  // for some generator g.
  Morphism(const SullivanAlgebra& source, const Dga& target, std::vector<Element> images);

  static Morphism identity(const SullivanAlgebra& a);

  const SullivanAlgebra& source() const { return *source_; }
  const Dga& target() const { return *target_; }
  const std::vector<Element>& images() const { return images_; }

  Element apply(const Element& a) const;
  // Matrix of f : A^k → B^k.
  const QMatrix& matrix(int k) const;

 private:
  const SullivanAlgebra* source_;
  const Dga* target_;
  std::vector<Element> images_;
  mutable std::vector<std::optional<QMatrix>> cache_;
};

Element apply_morphism(const Morphism& f, const Element& a);

// H(f) in global class coordinates: rows are classes of hb, columns classes of ha.
QMatrix induced_cohomology_map(const Morphism& f, const Cohomology& ha, const Cohomology& hb);

// The choice on the target obtained by pushing c forward along f, which must
// induce an isomorphism on cohomology: α_B = f α_A H(f)⁻¹ and γ_B = f γ_A on
// the image of E. Throws NotAnIsomorphism.
CochainChoice transport_choice(const Morphism& f, const InvariantContext& a, const InvariantContext& b,
                               const CochainChoice& c);

}  // namespace massey
