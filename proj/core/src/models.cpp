#include "massey/models.hpp"

#include "massey/multilinear.hpp"

namespace massey {

namespace {

std::string pair_name(const std::string& prefix, int i, int j) {
  return prefix + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

// Index of the unordered pair {i, j} among pairs i ≤ j in lexicographic order.
std::size_t pair_index(int r, int i, int j) {
  if (i > j) std::swap(i, j);
  return static_cast<std::size_t>(i * r - i * (i - 1) / 2 + (j - i));
}

Orientation top_orientation(int degree) { return Orientation{degree, QVector{Rational(1)}}; }

}  // namespace

std::unique_ptr<SullivanAlgebra> p3_model(int r, int cap) { return p3_model_with_h3(r, 0, cap); }

std::unique_ptr<SullivanAlgebra> p3_model_with_h3(int r, int s, int cap) {
  if (r < 1 || s < 0) throw std::invalid_argument("p3_model: need r >= 1 and s >= 0");
  std::vector<Generator> gens;
  std::vector<Polynomial> diffs;
  for (int i = 0; i < r; ++i) {
    gens.push_back({"x" + std::to_string(i + 1), 2});
    diffs.push_back({});
  }
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      gens.push_back({pair_name("y", i, j), 3});
      diffs.push_back({{Rational(1), {static_cast<std::size_t>(i), static_cast<std::size_t>(j)}}});
    }
  for (int k = 0; k < s; ++k) {
    gens.push_back({"w" + std::to_string(k + 1), 3});
    diffs.push_back({});
  }
  std::string name = "P3(r=" + std::to_string(r) + (s ? ",h3=" + std::to_string(s) : "") + ")";
  return std::make_unique<SullivanAlgebra>(name, std::move(gens), std::move(diffs), cap);
}

std::unique_ptr<ExplicitAlgebra> example_2_7_algebra() {
  std::vector<std::vector<std::string>> basis(5);
  basis[0] = {"1"};
  basis[2] = {"x", "y", "z"};
  basis[4] = {"t"};
  std::vector<ExplicitAlgebra::ProductRule> rules;
  for (std::size_t i = 0; i < 3; ++i) rules.push_back({2, i, 2, i, {{0, Rational(1)}}});
  return std::make_unique<ExplicitAlgebra>("squares", 4, std::move(basis), rules, std::vector<QMatrix>{});
}

std::unique_ptr<ExplicitAlgebra> example_2_7_completion() {
  std::vector<std::vector<std::string>> basis(9);
  basis[0] = {"1"};
  basis[2] = {"x", "y", "z"};
  basis[4] = {"t", "s"};
  basis[6] = {"x'", "y'", "z'"};
  basis[8] = {"v"};
  std::vector<ExplicitAlgebra::ProductRule> rules;
  for (std::size_t i = 0; i < 3; ++i) {
    rules.push_back({2, i, 2, i, {{0, Rational(1)}}});
    rules.push_back({2, i, 4, 1, {{i, Rational(1)}}});
    rules.push_back({2, i, 6, i, {{0, Rational(1)}}});
  }
  rules.push_back({4, 0, 4, 1, {{0, Rational(1)}}});
  auto a = std::make_unique<ExplicitAlgebra>("squares-completed", 8, std::move(basis), rules, std::vector<QMatrix>{});
  a->set_orientation(top_orientation(8));
  return a;
}

std::unique_ptr<ExplicitAlgebra> formal_model(const ExplicitAlgebra& h) {
  std::vector<std::vector<std::string>> basis;
  std::vector<std::pair<int, std::size_t>> where;
  for (int k = 0; k <= h.cap(); ++k) {
    basis.push_back(h.labels(k));
    for (std::size_t i = 0; i < h.dim(k); ++i) where.emplace_back(k, i);
  }
  std::vector<ExplicitAlgebra::ProductRule> rules;
  for (const auto& [key, value] : h.product_table()) {
    const auto [p, i] = where[key.first];
    const auto [q, j] = where[key.second];
    if (p == 0 || q == 0) continue;
    rules.push_back({p, i, q, j, value});
  }
  auto out = std::make_unique<ExplicitAlgebra>(h.name() + "-formal", h.cap(), std::move(basis), rules,
                                               std::vector<QMatrix>{});
  if (h.orientation()) out->set_orientation(*h.orientation());
  return out;
}

std::unique_ptr<ExplicitAlgebra> cohomology_algebra(const Cohomology& h) {
  const int top = h.top();
  std::vector<std::vector<std::string>> basis(top + 1);
  basis[0] = {"1"};
  for (std::size_t i = 0; i < h.size(); ++i) basis[h.basis().degrees[i]].push_back(h.basis().labels[i]);
  std::vector<ExplicitAlgebra::ProductRule> rules;
  for (std::size_t a = 0; a < h.size(); ++a)
    for (std::size_t b = a; b < h.size(); ++b) {
      const int p = h.basis().degrees[a], q = h.basis().degrees[b];
      if (p + q > top) continue;
      const QVector v = h.cup(a, b);
      SparseVec value;
      for (std::size_t c = 0; c < v.size(); ++c)
        if (sgn(v[c]) != 0) value.emplace_back(c - h.offset(p + q), v[c]);
      if (!value.empty()) rules.push_back({p, a - h.offset(p), q, b - h.offset(q), std::move(value)});
    }
  auto out = std::make_unique<ExplicitAlgebra>("H(" + h.dga().name() + ")", top, std::move(basis), rules,
                                               std::vector<QMatrix>{});
  if (const auto& o = h.dga().orientation(); o && o->degree <= top) {
    Orientation shadow{o->degree, std::nullopt};
    if (o->fundamental) shadow.fundamental = h.class_of(Element{o->degree, *o->fundamental});
    out->set_orientation(std::move(shadow));
  }
  return out;
}

std::unique_ptr<ExplicitAlgebra> connected_sum_s2_s6(int r) {
  if (r < 1) throw std::invalid_argument("connected_sum_s2_s6: need r >= 1");
  std::vector<std::vector<std::string>> basis(9);
  basis[0] = {"1"};
  for (int i = 0; i < r; ++i) {
    basis[2].push_back("a" + std::to_string(i + 1));
    basis[6].push_back("b" + std::to_string(i + 1));
  }
  basis[8] = {"v"};
  std::vector<ExplicitAlgebra::ProductRule> rules;
  for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i) rules.push_back({2, i, 6, i, {{0, Rational(1)}}});
  auto a = std::make_unique<ExplicitAlgebra>("#" + std::to_string(r) + "(S2xS6)", 8, std::move(basis), rules,
                                             std::vector<QMatrix>{});
  a->set_orientation(top_orientation(8));
  return a;
}

// Degrees: A² = x_i, A³ = y_p, A⁴ = s_p ⊕ t_p, A⁵ = u_p, A⁶ = w_i, A⁸ = v, with
// p running over pairs i ≤ j. d y_p = s_p, d t_p = u_p and
//   x_i x_j = s_{ij},  s_p t_q = δ_pq v,  x_i w_j = δ_ij v,  y_p u_q = δ_pq v,
//   x_j t_{ij} = w_i,  x_i y_p = Σ_q c(i,p,q) u_q,  y_p y_q = −Σ_i c(i,p,q) w_i,
// with c antisymmetric in (p, q). Every ordinary cocycle choice gives
// P(q ⊗ e_p ∧ e_q) = −c(q,p,q)·v, so taking c from an element ρ of R(H²) makes
// the pentagonal tensor pair to Σρ² ≠ 0 against ρ.
std::unique_ptr<ExplicitAlgebra> nonformal_witness(int r) {
  if (r < 3) throw std::invalid_argument("nonformal_witness: need r >= 3");
  const int n = r * (r + 1) / 2;
  std::vector<std::vector<std::string>> basis(9);
  basis[0] = {"1"};
  for (int i = 0; i < r; ++i) {
    basis[2].push_back("x" + std::to_string(i + 1));
    basis[6].push_back("w" + std::to_string(i + 1));
  }
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      basis[3].push_back(pair_name("y", i, j));
      basis[5].push_back(pair_name("u", i, j));
    }
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) basis[4].push_back(pair_name("s", i, j));
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) basis[4].push_back(pair_name("t", i, j));
  basis[8] = {"v"};

  // c(i, p, q) from the first basis vector of R(Q^r).
  const MMap m = m_map_degree2(static_cast<std::size_t>(r));
  const SubspaceBasis R = kernel_basis(m.matrix);
  const QVector& rho = R[0];
  std::vector<Rational> c(static_cast<std::size_t>(r) * n * n);
  auto C = [&](int i, int p, int q) -> Rational& { return c[(static_cast<std::size_t>(i) * n + p) * n + q]; };
  for (std::size_t k = 0; k < m.domain.size(); ++k) {
    if (sgn(rho[k]) == 0) continue;
    const auto [q, l] = m.domain.pair(k);
    const Word& ab = m.lambda_w.word(l);
    C(static_cast<int>(q), ab[0], ab[1]) = -rho[k];
    C(static_cast<int>(q), ab[1], ab[0]) = rho[k];
  }

  std::vector<ExplicitAlgebra::ProductRule> rules;
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) rules.push_back({2, std::size_t(i), 2, std::size_t(j), {{pair_index(r, i, j), 1}}});
  for (int p = 0; p < n; ++p) {
    rules.push_back({4, std::size_t(p), 4, std::size_t(n + p), {{0, 1}}});
    rules.push_back({3, std::size_t(p), 5, std::size_t(p), {{0, 1}}});
  }
  for (int i = 0; i < r; ++i) rules.push_back({2, std::size_t(i), 6, std::size_t(i), {{0, 1}}});
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) rules.push_back({2, std::size_t(j), 4, std::size_t(n) + pair_index(r, i, j), {{std::size_t(i), 1}}});
  for (int i = 0; i < r; ++i)
    for (int p = 0; p < n; ++p) {
      SparseVec v;
      for (int q = 0; q < n; ++q)
        if (sgn(C(i, p, q)) != 0) v.emplace_back(q, C(i, p, q));
      if (!v.empty()) rules.push_back({2, std::size_t(i), 3, std::size_t(p), v});
    }
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      SparseVec v;
      for (int i = 0; i < r; ++i)
        if (sgn(C(i, p, q)) != 0) v.emplace_back(i, -C(i, p, q));
      if (!v.empty()) rules.push_back({3, std::size_t(p), 3, std::size_t(q), v});
    }

  std::vector<QMatrix> d(9);
  d[3] = QMatrix(2 * n, n);
  d[4] = QMatrix(n, 2 * n);
  for (int p = 0; p < n; ++p) {
    d[3](p, p) = 1;
    d[4](p, n + p) = 1;
  }
  for (int k : {0, 1, 2, 5, 6, 7, 8}) d[k] = QMatrix(k + 1 <= 8 ? basis[k + 1].size() : 0, basis[k].size());
  auto a = std::make_unique<ExplicitAlgebra>("Witness(r=" + std::to_string(r) + ")", 8, std::move(basis), rules,
                                             std::move(d));
  a->set_orientation(top_orientation(8));
  return a;
}

}  // namespace massey
