#include "massey/morphism.hpp"

#include "massey/errors.hpp"

namespace massey {

Morphism::Morphism(const SullivanAlgebra& source, const Dga& target, std::vector<Element> images)
    : source_(&source), target_(&target), images_(std::move(images)) {
  const auto& gens = source.generators();
  if (images_.size() != gens.size())
    throw NotAMorphism("expected " + std::to_string(gens.size()) + " generator images, got " +
                       std::to_string(images_.size()));
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const Element& im = images_[g];
    if (im.degree != gens[g].degree || im.coeffs.size() != target.dim(im.degree))
      throw NotAMorphism("the image of " + gens[g].name + " does not have degree " +
                         std::to_string(gens[g].degree));
  }
  cache_.resize(source.cap() + 1);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const int d = gens[g].degree + 1;
    // Above the cap of either side nothing can be checked.
    if (d > source.cap() || d > target.cap()) continue;
    const Element lhs = target.differential(images_[g]);
    const Element rhs = apply(source.polynomial(source.generator_differential(g), d));
    if (!(lhs == rhs)) throw NotAMorphism("d f(" + gens[g].name + ") ≠ f(d " + gens[g].name + ")");
  }
}

Morphism Morphism::identity(const SullivanAlgebra& a) {
  std::vector<Element> images;
  for (std::size_t g = 0; g < a.generators().size(); ++g) images.push_back(a.generator(g));
  return Morphism(a, a, std::move(images));
}

const QMatrix& Morphism::matrix(int k) const {
  if (k < 0 || k > source_->cap()) throw DegreeCapExceeded(k, source_->cap());
  auto& slot = cache_[k];
  if (slot) return *slot;
  QMatrix m(target_->dim(k), source_->dim(k));
  for (std::size_t i = 0; i < source_->dim(k); ++i) {
    Element v = target_->unit();
    for (auto g : source_->monomial_word(k, i)) v = target_->multiply(v, images_[g]);
    m.set_column(i, v.coeffs);
  }
  slot = std::move(m);
  return *slot;
}

Element Morphism::apply(const Element& a) const { return {a.degree, matrix(a.degree).apply(a.coeffs)}; }

Element apply_morphism(const Morphism& f, const Element& a) { return f.apply(a); }

QMatrix induced_cohomology_map(const Morphism& f, const Cohomology& ha, const Cohomology& hb) {
  if (&ha.dga() != &f.source() || &hb.dga() != &f.target())
    throw DegreeMismatch("cohomology computed for a different algebra");
  QMatrix out(hb.size(), ha.size());
  for (std::size_t i = 0; i < ha.size(); ++i) {
    const int k = ha.basis().degrees[i];
    if (k > hb.top()) continue;
    out.set_column(i, hb.global_class_of(f.apply(ha.representative(i))));
  }
  return out;
}

CochainChoice transport_choice(const Morphism& f, const InvariantContext& a, const InvariantContext& b,
                               const CochainChoice& c) {
  const QMatrix hf = induced_cohomology_map(f, a.cohomology(), b.cohomology());
  const auto inv = invert(hf);
  if (!inv) throw NotAnIsomorphism("the morphism does not induce an isomorphism on cohomology");
  const Dga& tb = b.dga();
  const GradedBasis& hb = b.products().h;

  CochainChoice out;
  for (std::size_t y = 0; y < hb.size(); ++y) {
    Element v = tb.zero(hb.degrees[y]);
    for (std::size_t x = 0; x < inv->rows(); ++x)
      if (sgn((*inv)(x, y)) != 0) add_scaled(v, (*inv)(x, y), f.apply(c.alpha[x]));
    out.alpha.push_back(std::move(v));
  }
  const QMatrix fe = induced_on_e(a, b, hf);
  const auto fe_inv = invert(fe);
  if (!fe_inv) throw NotAnIsomorphism("the morphism does not induce an isomorphism on E");
  const GradedBasis& eb = b.products().e_basis;
  for (std::size_t j = 0; j < eb.size(); ++j) {
    Element v = tb.zero(eb.degrees[j] - 1);
    for (std::size_t i = 0; i < fe_inv->rows(); ++i)
      if (sgn((*fe_inv)(i, j)) != 0) add_scaled(v, (*fe_inv)(i, j), f.apply(c.gamma[i]));
    out.gamma.push_back(std::move(v));
  }
  return out;
}

}  // namespace massey
