#include "massey/choice.hpp"

#include <random>

namespace massey {

ProductStructure product_structure(const Cohomology& h, std::optional<int> w_bound) {
  ProductStructure ps;
  ps.h = h.basis();
  ps.w = PowerBasis(ps.h, PowerKind::GradedSymmetric, 2, w_bound.value_or(h.top()));
  ps.product = QMatrix(ps.h.size(), ps.w.size());
  for (std::size_t t = 0; t < ps.w.size(); ++t) {
    const Word& x = ps.w.word(t);
    ps.product.set_column(t, h.cup(x[0], x[1]));
  }
  ps.e = kernel_basis(ps.product);
  ps.e_basis = subspace_graded(ps.e, ps.w.as_graded(), "e");
  ps.e_inclusion = ps.e.as_columns();
  return ps;
}

SubspaceBasis e_kernel(const Cohomology& h) { return product_structure(h).e; }

Element alpha_squared(const Dga& a, const ProductStructure& ps, const std::vector<Element>& alpha,
                      const QVector& w_vector, int degree) {
  Element out = a.zero(degree);
  for (std::size_t t = 0; t < w_vector.size(); ++t) {
    if (sgn(w_vector[t]) == 0) continue;
    const Word& x = ps.w.word(t);
    add_scaled(out, w_vector[t], a.multiply(alpha[x[0]], alpha[x[1]]));
  }
  return out;
}

std::vector<Element> prederivative_gamma(const Cohomology& h, const ProductStructure& ps,
                                         const std::vector<Element>& alpha) {
  std::vector<Element> gamma;
  for (std::size_t i = 0; i < ps.e.dim(); ++i) {
    const int k = ps.e_basis.degrees[i];
    const Element sq = alpha_squared(h.dga(), ps, alpha, ps.e[i], k);
    auto g = h.primitive(sq);
    if (!g) throw InternalInconsistency("α² is not exact on " + ps.e_basis.labels[i]);
    gamma.push_back(std::move(*g));
  }
  return gamma;
}

CochainChoice canonical_choice(const Cohomology& h, const ProductStructure& ps) {
  CochainChoice c;
  for (std::size_t i = 0; i < h.size(); ++i) c.alpha.push_back(h.representative(i));
  c.gamma = prederivative_gamma(h, ps, c.alpha);
  return c;
}

void validate_choice(const Cohomology& h, const ProductStructure& ps, const CochainChoice& c) {
  if (c.alpha.size() != h.size() || c.gamma.size() != ps.e.dim())
    throw InternalInconsistency("cochain choice has the wrong shape");
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (c.alpha[i].degree != ps.h.degrees[i] || !h.is_closed(c.alpha[i]))
      throw InternalInconsistency("α(" + ps.h.labels[i] + ") is not a cocycle of the right degree");
    if (h.global_class_of(c.alpha[i]) != unit_vector(h.size(), i))
      throw InternalInconsistency("α(" + ps.h.labels[i] + ") represents the wrong class");
  }
  for (std::size_t j = 0; j < ps.e.dim(); ++j) {
    const int k = ps.e_basis.degrees[j];
    if (c.gamma[j].degree != k - 1) throw InternalInconsistency("γ has the wrong degree");
    if (h.dga().differential(c.gamma[j]) != alpha_squared(h.dga(), ps, c.alpha, ps.e[j], k))
      throw InternalInconsistency("dγ differs from α² on " + ps.e_basis.labels[j]);
  }
}

std::vector<Element> restrict_to_e(const Dga& a, const ProductStructure& ps, const AlgebraMap& on_w) {
  std::vector<Element> out;
  for (std::size_t j = 0; j < ps.e.dim(); ++j) {
    Element v = a.zero(ps.e_basis.degrees[j] + on_w.shift);
    const QVector& e = ps.e[j];
    for (std::size_t t = 0; t < e.size(); ++t)
      if (sgn(e[t]) != 0) add_scaled(v, e[t], on_w.values[t]);
    out.push_back(std::move(v));
  }
  return out;
}

CochainChoice perturb_choice(const Cohomology& h, const ProductStructure& ps, const CochainChoice& c,
                             const std::vector<Element>& beta, const std::vector<Element>& eta) {
  const Dga& a = h.dga();
  CochainChoice out = c;
  std::vector<Element> half;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Element db = a.differential(beta[i]);
    out.alpha[i] += db;
    Element f = c.alpha[i];
    add_scaled(f, Rational(1, 2), db);
    half.push_back(std::move(f));
  }
  const AlgebraMap bmap = linear_map(ps.h, -1, beta);
  const AlgebraMap fmap = linear_map(ps.h, 0, half);
  const AlgebraMap prod = map_sym_product(a, bmap, fmap, h.top());
  const auto correction = restrict_to_e(a, ps, prod);
  for (std::size_t j = 0; j < ps.e.dim(); ++j) {
    out.gamma[j] += correction[j];
    out.gamma[j] += eta[j];
  }
  return out;
}

CochainChoice random_choice(const Cohomology& h, const ProductStructure& ps, const CochainChoice& c, unsigned seed,
                            bool eta_only) {
  const Dga& a = h.dga();
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto random_in = [&](const std::vector<QVector>& basis, int degree) {
    Element e = a.zero(degree);
    for (const auto& v : basis) {
      const int k = coeff(rng);
      if (k != 0) axpy(e.coeffs, Rational(k), v);
    }
    return e;
  };
  std::vector<Element> beta, eta;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const int k = ps.h.degrees[i] - 1;
    if (eta_only || a.dim(k) == 0) {
      beta.push_back(a.zero(k));
      continue;
    }
    std::vector<QVector> units;
    for (std::size_t t = 0; t < a.dim(k); ++t) units.push_back(unit_vector(a.dim(k), t));
    beta.push_back(random_in(units, k));
  }
  for (std::size_t j = 0; j < ps.e.dim(); ++j) {
    const int k = ps.e_basis.degrees[j] - 1;
    const QMatrix& d = a.d_matrix(k);
    const auto cycles = d.rows() == 0 ? SubspaceBasis::whole(a.dim(k)).basis() : kernel_basis(d).basis();
    eta.push_back(random_in(cycles, k));
  }
  return perturb_choice(h, ps, c, beta, eta);
}

}  // namespace massey
