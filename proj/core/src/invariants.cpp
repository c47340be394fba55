#include "massey/invariants.hpp"

#include <map>

#include "massey/errors.hpp"

namespace massey {

namespace {

int koszul(int a, int b) { return (a % 2 != 0 && b % 2 != 0) ? -1 : 1; }
int parity_sign(int a) { return a % 2 != 0 ? -1 : 1; }

// Degree of a homogeneous vector in a graded basis (the first nonzero entry).
int vector_degree(std::span<const Rational> v, const GradedBasis& g) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) return g.degrees[i];
  return 0;
}

}  // namespace

InvariantContext::InvariantContext(const Dga& a, std::optional<int> through)
    : h_(a), through_(through.value_or(h_.top() + 2)) {
  if (a.truncating() && through_ > h_.top() + 2) throw DegreeCapExceeded(through_ - 1, a.cap());
  ps_ = product_structure(h_, std::max(h_.top(), through_ - 2));
  sym_ = full_symmetrization(ps_.h, ps_.w, ps_.e, through_ - 1);
  k_ = K_kernel(sym_);

  const GradedBasis& eb = ps_.e_basis;
  const QMatrix& ei = ps_.e_inclusion;

  // ℬ: kernel of 𝒢²E → 𝒢⁴H.
  sym_e_ = PowerBasis(eb, PowerKind::GradedSymmetric, 2, through_ - 1);
  const PowerBasis s4(ps_.h, PowerKind::GradedSymmetric, 4, through_ - 1);
  QMatrix full4(s4.size(), sym_e_.size());
  for (std::size_t i = 0; i < sym_e_.size(); ++i) {
    const Word& ab = sym_e_.word(i);
    for (std::size_t t = 0; t < ps_.w.size(); ++t) {
      if (sgn(ei(t, ab[0])) == 0) continue;
      for (std::size_t u = 0; u < ps_.w.size(); ++u) {
        if (sgn(ei(u, ab[1])) == 0) continue;
        Word w = ps_.w.word(t);
        w.insert(w.end(), ps_.w.word(u).begin(), ps_.w.word(u).end());
        const Located loc = s4.locate(w);
        if (loc.sign != 0) full4(loc.index, i) += loc.sign * ei(t, ab[0]) * ei(u, ab[1]);
      }
    }
  }
  b_ = kernel_basis(full4);

  // 𝒟: kernel of 𝔪 ∘ (Id ⊗ Λ²ι) on H ⊗ Λ²E.
  lambda_e_ = PowerBasis(eb, PowerKind::GradedAntisymmetric, 2, through_);
  h_lambda_e_ = PairBasis(ps_.h, lambda_e_.as_graded(), through_);
  const PowerBasis s3(ps_.h, PowerKind::GradedSymmetric, 3, through_);
  const PairBasis cod(s3.as_graded(), ps_.w.as_graded(), through_);
  QMatrix m(cod.size(), h_lambda_e_.size());
  h_e_e_ = PairBasis(sym_.domain.as_graded(), eb, through_);
  id_j_ = QMatrix(h_e_e_.size(), h_lambda_e_.size());
  for (std::size_t i = 0; i < h_lambda_e_.size(); ++i) {
    const auto [q, l] = h_lambda_e_.pair(i);
    const Word& ab = lambda_e_.word(l);
    const int sign = -koszul(eb.degrees[ab[0]], eb.degrees[ab[1]]);
    for (std::size_t t = 0; t < ps_.w.size(); ++t) {
      if (sgn(ei(t, ab[0])) == 0) continue;
      for (std::size_t u = 0; u < ps_.w.size(); ++u) {
        if (sgn(ei(u, ab[1])) == 0) continue;
        const Rational coef = ei(t, ab[0]) * ei(u, ab[1]);
        auto add = [&](std::size_t first, std::size_t second, const Rational& c) {
          Word w{static_cast<std::uint32_t>(q)};
          w.insert(w.end(), ps_.w.word(first).begin(), ps_.w.word(first).end());
          const Located loc = s3.locate(w);
          if (loc.sign == 0) return;
          if (auto k = cod.locate(loc.index, second)) m(*k, i) += loc.sign * c;
        };
        add(t, u, coef);
        add(u, t, sign * coef);
      }
    }
    auto add_j = [&](std::size_t first, std::size_t second, int s) {
      const auto inner = sym_.domain.locate(q, first);
      if (!inner) return;
      if (auto k = h_e_e_.locate(*inner, second)) id_j_(*k, i) += s;
    };
    add_j(ab[0], ab[1], 1);
    add_j(ab[1], ab[0], sign);
  }
  d_ = kernel_basis(m);

  for (std::size_t hc = 0; hc < ps_.h.size(); ++hc)
    for (std::size_t e = 0; e < eb.size(); ++e)
      if (ps_.h.degrees[hc] == eb.degrees[e] - 1) l2_.emplace_back(hc, e);
}

QVector InvariantContext::cup(std::size_t a, std::size_t b) const {
  const Located loc = ps_.w.locate({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
  if (loc.sign == 0) return zeros(ps_.h.size());
  return scaled(ps_.product.column(loc.index), Rational(loc.sign));
}

int InvariantContext::degree_of_k(std::size_t i) const { return vector_degree(k_[i], sym_.domain.as_graded()); }

int InvariantContext::degree_of_d(std::size_t i) const {
  return vector_degree(d_[i], h_lambda_e_.as_graded());
}

QMatrix InvariantContext::l2_map(std::span<const Rational> coords) const {
  QMatrix out(ps_.h.size(), ps_.e_basis.size());
  for (std::size_t u = 0; u < l2_.size(); ++u) out(l2_[u].first, l2_[u].second) = coords[u];
  return out;
}

QVector closed_class(const InvariantContext& ctx, const Element& z, const std::string& what) {
  if (z.degree > ctx.top() && !ctx.dga().truncating()) return zeros(ctx.cohomology().size());
  if (!ctx.cohomology().is_closed(z)) throw InternalInconsistency(what + " is not closed");
  return ctx.cohomology().global_class_of(z);
}

Element triple_cochain(const InvariantContext& ctx, const CochainChoice& c, std::span<const Rational> v,
                       int degree) {
  const Dga& a = ctx.dga();
  const GradedBasis& h = ctx.products().h;
  Element out = a.zero(degree);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    const auto [q, e] = ctx.h_e().pair(i);
    add_scaled(out, parity_sign(h.degrees[q]) * v[i], a.multiply(c.alpha[q], c.gamma[e]));
  }
  return out;
}

Element pentagonal_cochain(const InvariantContext& ctx, const CochainChoice& c, std::span<const Rational> v,
                           int degree) {
  const Dga& a = ctx.dga();
  const GradedBasis& eb = ctx.products().e_basis;
  Element out = a.zero(degree);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    const auto [q, l] = ctx.h_lambda_e().pair(i);
    const Word& ab = ctx.lambda_e().word(l);
    const Element gg = a.multiply(c.gamma[ab[0]], c.gamma[ab[1]]);
    add_scaled(out, parity_sign(eb.degrees[ab[0]]) * v[i], a.multiply(c.alpha[q], gg));
  }
  return out;
}

namespace {

ObstructionTensor make_tensor(const InvariantContext& ctx, std::string name, int shift, const SubspaceBasis& domain,
                              const GradedBasis& ambient) {
  ObstructionTensor t;
  t.name = std::move(name);
  t.shift = shift;
  t.domain = domain;
  for (const auto& v : domain.basis()) t.degrees.push_back(vector_degree(v, ambient));
  t.matrix = QMatrix(ctx.cohomology().size(), domain.dim());
  return t;
}

}  // namespace

ObstructionTensor uniform_triple(const InvariantContext& ctx, const CochainChoice& c) {
  ObstructionTensor t = make_tensor(ctx, "T", -1, ctx.k(), ctx.h_e().as_graded());
  for (std::size_t j = 0; j < ctx.k().dim(); ++j) {
    const Element z = triple_cochain(ctx, c, ctx.k()[j], t.degrees[j] - 1);
    t.matrix.set_column(j, closed_class(ctx, z, "αγ on a vector of K"));
  }
  return t;
}

ObstructionTensor bianchi_massey(const InvariantContext& ctx, const CochainChoice& c) {
  const Dga& a = ctx.dga();
  const ProductStructure& ps = ctx.products();
  std::vector<Element> sq;
  for (std::size_t j = 0; j < ps.e.dim(); ++j)
    sq.push_back(alpha_squared(a, ps, c.alpha, ps.e[j], ps.e_basis.degrees[j]));
  const AlgebraMap f = linear_map(ps.e_basis, 0, std::move(sq));
  const AlgebraMap g = linear_map(ps.e_basis, -1, c.gamma);
  const AlgebraMap fg = map_sym_product(a, f, g, ctx.through() - 1);

  ObstructionTensor t = make_tensor(ctx, "F", -1, ctx.b(), ctx.sym_e().as_graded());
  for (std::size_t j = 0; j < ctx.b().dim(); ++j) {
    Element z = a.zero(t.degrees[j] - 1);
    const QVector& v = ctx.b()[j];
    for (std::size_t i = 0; i < v.size(); ++i)
      if (sgn(v[i]) != 0) add_scaled(z, v[i], fg.values[i]);
    t.matrix.set_column(j, closed_class(ctx, z, "α²γ on a vector of ℬ"));
  }
  return t;
}

ObstructionTensor pentagonal(const InvariantContext& ctx, const CochainChoice& c) {
  ObstructionTensor t = make_tensor(ctx, "P", -2, ctx.d(), ctx.h_lambda_e().as_graded());
  for (std::size_t j = 0; j < ctx.d().dim(); ++j) {
    const Element z = pentagonal_cochain(ctx, c, ctx.d()[j], t.degrees[j] - 2);
    t.matrix.set_column(j, closed_class(ctx, z, "αγ² on a vector of 𝒟"));
  }
  return t;
}

QMatrix pentagonal_degree10(const InvariantContext& ctx, const CochainChoice& c) {
  const Dga& a = ctx.dga();
  const GradedBasis& h = ctx.products().h;
  const GradedBasis& eb = ctx.products().e_basis;
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < ctx.d().dim(); ++j)
    if (ctx.degree_of_d(j) == 10) cols.push_back(j);
  QMatrix out(ctx.cohomology().size(), cols.size());
  for (std::size_t n = 0; n < cols.size(); ++n) {
    const QVector& v = ctx.d()[cols[n]];
    Element z = a.zero(8);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (sgn(v[i]) == 0) continue;
      const auto [q, l] = ctx.h_lambda_e().pair(i);
      const Word& ab = ctx.lambda_e().word(l);
      if (h.degrees[q] != 2 || eb.degrees[ab[0]] != 4 || eb.degrees[ab[1]] != 4)
        throw InternalInconsistency("degree-10 part of 𝒟 leaves H² ⊗ Λ²E⁴");
      add_scaled(z, v[i], a.multiply(c.alpha[q], a.multiply(c.gamma[ab[0]], c.gamma[ab[1]])));
    }
    out.set_column(n, closed_class(ctx, z, "αγ² in degree 8"));
  }
  return out;
}

QMatrix h_lambda_e_inclusion(const InvariantContext& ctx, const MMap& m) {
  const ProductStructure& ps = ctx.products();
  QMatrix e_in_w(m.w.size(), ps.e.dim());
  for (std::size_t t = 0; t < ps.w.size(); ++t) {
    const std::size_t u = m.w.locate(ps.w.word(t)).index;
    for (std::size_t j = 0; j < ps.e.dim(); ++j) e_in_w(u, j) = ps.e_inclusion(t, j);
  }
  const QMatrix lam = induced_power_map(ctx.lambda_e(), m.lambda_w, e_in_w);
  return induced_pair_map(ctx.h_lambda_e(), m.domain, QMatrix::identity(ps.h.size()), lam);
}

SubspaceBasis d_space_via_r(const InvariantContext& ctx) {
  const MMap m = graded_m_map(ctx.products().h, ctx.through());
  const SubspaceBasis r = kernel_basis(m.matrix);
  const QMatrix inc = h_lambda_e_inclusion(ctx, m);
  const SubspaceBasis both = intersect(r, image_basis(inc));
  std::vector<QVector> pulled;
  for (const auto& v : both.basis()) {
    auto x = solve_particular(inc, v);
    if (!x) throw InternalInconsistency("𝒟 vector outside H ⊗ Λ²E");
    pulled.push_back(std::move(*x));
  }
  return SubspaceBasis::span(ctx.h_lambda_e().size(), pulled);
}

}  // namespace massey

namespace massey {

namespace {

// Product of two class vectors.
QVector cup_vectors(const InvariantContext& ctx, std::span<const Rational> x, std::span<const Rational> y) {
  QVector out = zeros(ctx.cohomology().size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (sgn(y[j]) != 0) axpy(out, x[i] * y[j], ctx.cup(i, j));
  }
  return out;
}

QMatrix inverse(const QMatrix& f) {
  auto inv = invert(f);
  if (!inv) throw NotAnIsomorphism("the map is not invertible");
  return std::move(*inv);
}

// Rows of the linear map δ ↦ (Id δ|_K)∘post on L₂, one per entry (class o,
// column j' of post), indexed o·cols(post) + j'.
std::vector<SparseRow> l2_constraint(const InvariantContext& ctx, const QMatrix& post) {
  const GradedBasis& h = ctx.products().h;
  const std::size_t nh = h.size(), nk = ctx.k().dim(), np = post.cols();
  std::vector<std::vector<std::size_t>> by_e(ctx.products().e.dim());
  for (std::size_t u = 0; u < ctx.l2_index().size(); ++u) by_e[ctx.l2_index()[u].second].push_back(u);
  std::vector<std::map<std::size_t, Rational>> base(nh * nk);
  for (std::size_t j = 0; j < nk; ++j) {
    const QVector& v = ctx.k()[j];
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (sgn(v[i]) == 0) continue;
      const auto [q, e] = ctx.h_e().pair(i);
      const Rational c = parity_sign(h.degrees[q]) * v[i];
      for (std::size_t u : by_e[e]) {
        const QVector p = ctx.cup(q, ctx.l2_index()[u].first);
        for (std::size_t o = 0; o < nh; ++o)
          if (sgn(p[o]) != 0) base[o * nk + j][u] += c * p[o];
      }
    }
  }
  std::vector<SparseRow> out(nh * np);
  for (std::size_t o = 0; o < nh; ++o)
    for (std::size_t jp = 0; jp < np; ++jp) {
      std::map<std::size_t, Rational> acc;
      for (std::size_t j = 0; j < nk; ++j) {
        if (sgn(post(j, jp)) == 0) continue;
        for (const auto& [u, b] : base[o * nk + j]) acc[u] += b * post(j, jp);
      }
      for (auto& [u, b] : acc)
        if (sgn(b) != 0) out[o * np + jp].emplace_back(u, std::move(b));
    }
  return out;
}

SparseSystem l2_system(const InvariantContext& ctx, const QMatrix& post, std::span<const Rational> rhs) {
  SparseSystem sys(ctx.l2_index().size());
  auto rows = l2_constraint(ctx, post);
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!rows[i].empty() || sgn(rhs[i]) != 0) sys.add(std::move(rows[i]), rhs[i]);
  return sys;
}

}  // namespace

QVector flatten(const QMatrix& m) {
  QVector out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& x : m.row(r)) out.push_back(x);
  return out;
}

ChoiceDelta choice_delta(const InvariantContext& ctx, const CochainChoice& c_new, const CochainChoice& c_old) {
  const Cohomology& h = ctx.cohomology();
  const Dga& a = ctx.dga();
  const ProductStructure& ps = ctx.products();
  ChoiceDelta out;
  std::vector<Element> half;
  for (std::size_t i = 0; i < h.size(); ++i) {
    auto b = h.primitive(c_new.alpha[i] - c_old.alpha[i]);
    if (!b) throw InternalInconsistency("the two choices of α differ on " + ps.h.labels[i] + " by a non-exact cocycle");
    Element f = c_old.alpha[i];
    add_scaled(f, Rational(1, 2), a.differential(*b));
    half.push_back(std::move(f));
    out.beta.push_back(std::move(*b));
  }
  const AlgebraMap prod = map_sym_product(a, linear_map(ps.h, -1, out.beta), linear_map(ps.h, 0, half), h.top());
  const auto corr = restrict_to_e(a, ps, prod);
  out.delta = QMatrix(h.size(), ps.e.dim());
  for (std::size_t j = 0; j < ps.e.dim(); ++j)
    out.delta.set_column(j, closed_class(ctx, c_new.gamma[j] - c_old.gamma[j] - corr[j], "γ' − γ − β(α + ½dβ)"));
  return out;
}

SubspaceBasis l1_subspace(const InvariantContext& ctx) {
  const ProductStructure& ps = ctx.products();
  const std::size_t nh = ps.h.size(), ne = ps.e.dim();
  std::vector<QVector> maps;
  for (std::size_t x = 0; x < nh; ++x)
    for (std::size_t y = 0; y < nh; ++y) {
      if (ps.h.degrees[y] != ps.h.degrees[x] - 1) continue;
      // ζ : x ↦ y, zero on the other classes.
      QMatrix delta(nh, ne);
      for (std::size_t j = 0; j < ne; ++j) {
        QVector col = zeros(nh);
        for (std::size_t t = 0; t < ps.w.size(); ++t) {
          const Rational& coef = ps.e[j][t];
          if (sgn(coef) == 0) continue;
          const Word& uv = ps.w.word(t);
          const int du = ps.h.degrees[uv[0]], dv = ps.h.degrees[uv[1]];
          if (uv[0] == x) axpy(col, coef, ctx.cup(y, uv[1]));
          if (uv[1] == x) axpy(col, coef * koszul(du, dv) * parity_sign(dv), ctx.cup(y, uv[0]));
        }
        delta.set_column(j, col);
      }
      maps.push_back(flatten(delta));
    }
  return SubspaceBasis::span(nh * ne, maps);
}

QMatrix id_delta_on_k(const InvariantContext& ctx, const QMatrix& delta) {
  const GradedBasis& h = ctx.products().h;
  QMatrix out(h.size(), ctx.k().dim());
  for (std::size_t j = 0; j < ctx.k().dim(); ++j) {
    QVector col = zeros(h.size());
    const QVector& v = ctx.k()[j];
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (sgn(v[i]) == 0) continue;
      const auto [q, e] = ctx.h_e().pair(i);
      axpy(col, parity_sign(h.degrees[q]) * v[i], cup_vectors(ctx, unit_vector(h.size(), q), delta.column(e)));
    }
    out.set_column(j, col);
  }
  return out;
}

QMatrix id_delta_squared_on_d(const InvariantContext& ctx, const QMatrix& delta) {
  const GradedBasis& h = ctx.products().h;
  const GradedBasis& eb = ctx.products().e_basis;
  QMatrix out(h.size(), ctx.d().dim());
  for (std::size_t j = 0; j < ctx.d().dim(); ++j) {
    QVector col = zeros(h.size());
    const QVector& v = ctx.d()[j];
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (sgn(v[i]) == 0) continue;
      const auto [q, l] = ctx.h_lambda_e().pair(i);
      const Word& ab = ctx.lambda_e().word(l);
      const QVector dd = cup_vectors(ctx, delta.column(ab[0]), delta.column(ab[1]));
      axpy(col, parity_sign(eb.degrees[ab[0]]) * v[i], cup_vectors(ctx, unit_vector(h.size(), q), dd));
    }
    out.set_column(j, col);
  }
  return out;
}

QMatrix triple_delta_on_d(const InvariantContext& ctx, const ObstructionTensor& t, const QMatrix& delta) {
  const std::size_t nh = ctx.cohomology().size();
  const std::size_t ne = ctx.products().e.dim();
  const GradedBasis he = ctx.h_e().as_graded();
  QMatrix out(nh, ctx.d().dim());
  for (std::size_t j = 0; j < ctx.d().dim(); ++j) {
    const QVector w = ctx.id_j().apply(ctx.d()[j]);
    std::vector<QVector> parts(ne, zeros(ctx.h_e().size()));
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (sgn(w[k]) == 0) continue;
      const auto [inner, b] = ctx.h_e_e().pair(k);
      parts[b][inner] = w[k];
    }
    QVector col = zeros(nh);
    for (std::size_t b = 0; b < ne; ++b) {
      if (is_zero(parts[b])) continue;
      const auto coords = ctx.k().coordinates(parts[b]);
      if (!coords) throw InternalInconsistency("(Id j)(𝒟) leaves K ⊗ E");
      const QVector tv = t.matrix.apply(*coords);
      axpy(col, Rational(parity_sign(vector_degree(parts[b], he))), cup_vectors(ctx, tv, delta.column(b)));
    }
    out.set_column(j, col);
  }
  return out;
}

TransformationReport verify_transformation(const InvariantContext& ctx, const CochainChoice& c,
                                           const CochainChoice& c_new) {
  TransformationReport r;
  const QMatrix delta = choice_delta(ctx, c_new, c).delta;
  const ObstructionTensor t = uniform_triple(ctx, c), t2 = uniform_triple(ctx, c_new);
  const QMatrix id_delta = id_delta_on_k(ctx, delta);
  r.triple_law = (t2.matrix - t.matrix) == id_delta;
  r.lhs = pentagonal(ctx, c_new).matrix - pentagonal(ctx, c).matrix;
  r.rhs = triple_delta_on_d(ctx, t, delta) + id_delta_squared_on_d(ctx, delta);
  r.pentagonal_law = r.lhs == r.rhs;
  ObstructionTensor diff = t;
  diff.matrix = t.matrix - t2.matrix + id_delta;
  r.additivity = triple_delta_on_d(ctx, diff, delta).is_zero();
  return r;
}

CochainChoice realize_delta(const InvariantContext& ctx, const CochainChoice& c, const QMatrix& delta) {
  CochainChoice out = c;
  for (std::size_t e = 0; e < delta.cols(); ++e)
    for (std::size_t hc = 0; hc < delta.rows(); ++hc)
      if (sgn(delta(hc, e)) != 0) add_scaled(out.gamma[e], delta(hc, e), c.alpha[hc]);
  (void)ctx;
  return out;
}

std::optional<CochainChoice> find_vanishing_triple_choice(const InvariantContext& ctx, const CochainChoice& c) {
  const ObstructionTensor t = uniform_triple(ctx, c);
  if (t.is_zero()) return c;
  const SparseSystem sys =
      l2_system(ctx, QMatrix::identity(ctx.k().dim()), scaled(flatten(t.matrix), Rational(-1)));
  const auto x = sys.particular();
  if (!x) return std::nullopt;
  return realize_delta(ctx, c, ctx.l2_map(*x));
}

QMatrix triple_delta_matrix(const InvariantContext& ctx, const ObstructionTensor& t) {
  const std::size_t nh = ctx.cohomology().size(), nd = ctx.d().dim();
  const GradedBasis he = ctx.h_e().as_graded();
  std::vector<std::vector<std::size_t>> by_e(ctx.products().e.dim());
  for (std::size_t u = 0; u < ctx.l2_index().size(); ++u) by_e[ctx.l2_index()[u].second].push_back(u);
  QMatrix out(nh * nd, ctx.l2_index().size());
  for (std::size_t j = 0; j < nd; ++j) {
    const QVector w = ctx.id_j().apply(ctx.d()[j]);
    std::map<std::size_t, QVector> parts;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (sgn(w[k]) == 0) continue;
      const auto [inner, b] = ctx.h_e_e().pair(k);
      auto it = parts.try_emplace(b, zeros(ctx.h_e().size())).first;
      it->second[inner] = w[k];
    }
    for (const auto& [b, part] : parts) {
      if (by_e[b].empty()) continue;
      const auto coords = ctx.k().coordinates(part);
      if (!coords) throw InternalInconsistency("(Id j)(𝒟) leaves K ⊗ E");
      const QVector tv = scaled(t.matrix.apply(*coords), Rational(parity_sign(vector_degree(part, he))));
      for (std::size_t u : by_e[b]) {
        const QVector p = cup_vectors(ctx, tv, unit_vector(nh, ctx.l2_index()[u].first));
        for (std::size_t o = 0; o < nh; ++o)
          if (sgn(p[o]) != 0) out(o * nd + j, u) += p[o];
      }
    }
  }
  return out;
}

SubspaceBasis delta_subspace(const InvariantContext& ctx, const CochainChoice& c) {
  const std::size_t ambient = ctx.cohomology().size() * ctx.d().dim();
  const ObstructionTensor t = uniform_triple(ctx, c);
  if (t.is_zero()) return SubspaceBasis(ambient);
  const QMatrix phi = triple_delta_matrix(ctx, t);
  if (phi.is_zero()) return SubspaceBasis(ambient);
  const SparseSystem sys = l2_system(ctx, QMatrix::identity(ctx.k().dim()), zeros(ctx.cohomology().size() * ctx.k().dim()));
  std::vector<QVector> maps;
  for (const auto& v : sys.kernel()) maps.push_back(phi.apply(v));
  return SubspaceBasis::span(ambient, maps);
}

QMatrix induced_on_e(const InvariantContext& x, const InvariantContext& y, const QMatrix& f) {
  const ProductStructure &px = x.products(), &py = y.products();
  const QMatrix fw = induced_power_map(px.w, py.w, f);
  QMatrix out(py.e.dim(), px.e.dim());
  for (std::size_t j = 0; j < px.e.dim(); ++j) {
    const auto coords = py.e.coordinates(fw.apply(px.e[j]));
    if (!coords) throw NotAnIsomorphism("the map does not carry E into E");
    out.set_column(j, *coords);
  }
  return out;
}

namespace {

QMatrix restrict_between(const SubspaceBasis& from, const SubspaceBasis& to, const QMatrix& ambient_map,
                         const std::string& what) {
  QMatrix out(to.dim(), from.dim());
  for (std::size_t j = 0; j < from.dim(); ++j) {
    const auto coords = to.coordinates(ambient_map.apply(from[j]));
    if (!coords) throw NotAnIsomorphism("the map does not carry " + what + " into " + what);
    out.set_column(j, *coords);
  }
  return out;
}

}  // namespace

QMatrix induced_on_k(const InvariantContext& x, const InvariantContext& y, const QMatrix& f) {
  const QMatrix fe = induced_on_e(x, y, f);
  return restrict_between(x.k(), y.k(), induced_pair_map(x.h_e(), y.h_e(), f, fe), "K");
}

QMatrix induced_on_d(const InvariantContext& x, const InvariantContext& y, const QMatrix& f) {
  const QMatrix fe = induced_on_e(x, y, f);
  const QMatrix fl = induced_power_map(x.lambda_e(), y.lambda_e(), fe);
  return restrict_between(x.d(), y.d(), induced_pair_map(x.h_lambda_e(), y.h_lambda_e(), f, fl), "𝒟");
}

namespace {

void check_algebra_isomorphism(const InvariantContext& x, const InvariantContext& y, const QMatrix& f) {
  const ProductStructure &px = x.products(), &py = y.products();
  if (x.top() != y.top()) throw NotAnIsomorphism("the cohomology algebras are known through different degrees");
  if (f.rows() != py.h.size() || f.cols() != px.h.size()) throw NotAnIsomorphism("the map has the wrong shape");
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c)
      if (sgn(f(r, c)) != 0 && py.h.degrees[r] != px.h.degrees[c])
        throw NotAnIsomorphism("the map does not preserve degrees");
  (void)inverse(f);
  const QMatrix fw = induced_power_map(px.w, py.w, f);
  if (!(f * px.product == py.product * fw)) throw NotAnIsomorphism("the map does not preserve products");
}

}  // namespace

Discrepancy pentagonal_discrepancy(const InvariantContext& x, const InvariantContext& y, const QMatrix& f) {
  check_algebra_isomorphism(x, y, f);
  const QMatrix fk = induced_on_k(x, y, f);
  const QMatrix fd = induced_on_d(x, y, f);

  Discrepancy out;
  out.choice_x = canonical_choice(x.cohomology(), x.products());
  const CochainChoice c0 = canonical_choice(y.cohomology(), y.products());
  const ObstructionTensor tb = uniform_triple(x, out.choice_x);
  const ObstructionTensor tc = uniform_triple(y, c0);
  // (𝒯_{c0} + Id δ|_K)∘F_K = F∘𝒯_b.
  const QMatrix target = f * tb.matrix - tc.matrix * fk;
  const auto sol = l2_system(y, fk, flatten(target)).particular();
  if (!sol) throw NoIntertwiningChoices("no cochain choices intertwine the uniform triple products");
  out.choice_y = realize_delta(y, c0, y.l2_map(*sol));

  const ObstructionTensor pb = pentagonal(x, out.choice_x);
  const ObstructionTensor pc = pentagonal(y, out.choice_y);
  out.difference = inverse(f) * pc.matrix * fd - pb.matrix;
  out.delta = delta_subspace(x, out.choice_x);
  out.reduced = out.delta.reduce(flatten(out.difference));
  out.zero = is_zero(out.reduced);
  return out;
}

QVector orientation_functional(const Cohomology& h) {
  const auto& o = h.dga().orientation();
  if (!o) throw MissingOrientation(h.dga().name() + " has no orientation");
  if (o->degree < 1 || o->degree > h.top() || h.betti(o->degree) != 1)
    throw MissingOrientation("the orientation degree does not carry a one-dimensional cohomology group");
  if (!o->fundamental) return QVector{Rational(1)};
  const QVector cls = h.class_of(Element{o->degree, *o->fundamental});
  if (sgn(cls[0]) == 0) throw MissingOrientation("the fundamental cocycle is exact");
  return QVector{1 / cls[0]};
}

QVector canonical_element(const InvariantContext& ctx, const ObstructionTensor& p,
                          std::span<const Rational> functional) {
  const auto& o = ctx.dga().orientation();
  if (!o) throw MissingOrientation(ctx.dga().name() + " has no orientation");
  const std::size_t off = ctx.cohomology().offset(o->degree);
  QVector out = zeros(p.matrix.cols());
  for (std::size_t j = 0; j < p.matrix.cols(); ++j)
    for (std::size_t i = 0; i < functional.size(); ++i) out[j] += functional[i] * p.matrix(off + i, j);
  return out;
}

QVector canonical_element(const InvariantContext& ctx, const ObstructionTensor& p) {
  return canonical_element(ctx, p, orientation_functional(ctx.cohomology()));
}

}  // namespace massey
