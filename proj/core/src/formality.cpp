#include "massey/formality.hpp"

#include "massey/errors.hpp"

namespace massey {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Formal: return "formal";
    case Verdict::NotFormal: return "not formal";
    case Verdict::NotApplicable: return "not applicable";
  }
  return "";
}

std::optional<std::string> poincare_failure(const Cohomology& h) {
  const auto& o = h.dga().orientation();
  if (!o) return "no orientation";
  const int m = o->degree;
  if (m > h.top()) return "cohomology is only known through degree " + std::to_string(h.top());
  if (h.betti(m) != 1) return "H^" + std::to_string(m) + " is not one-dimensional";
  for (int k = m + 1; k <= h.top(); ++k)
    if (h.betti(k) != 0) return "H^" + std::to_string(k) + " is nonzero above the orientation degree";
  const QVector eps = orientation_functional(h);
  const std::size_t top_class = h.offset(m);
  for (int k = 1; k < m; ++k) {
    const std::size_t p = h.betti(k), q = h.betti(m - k);
    if (p != q) return "H^" + std::to_string(k) + " and H^" + std::to_string(m - k) + " differ in dimension";
    if (p == 0) continue;
    QMatrix pairing(p, q);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < q; ++j)
        pairing(i, j) = eps[0] * h.cup(h.offset(k) + i, h.offset(m - k) + j)[top_class];
    if (rank(pairing) != p)
      return "the pairing H^" + std::to_string(k) + " x H^" + std::to_string(m - k) + " is degenerate";
  }
  return std::nullopt;
}

std::optional<TensorWitness> first_nonzero(const InvariantContext& ctx, const ObstructionTensor& t) {
  for (std::size_t j = 0; j < t.matrix.cols(); ++j)
    for (std::size_t i = 0; i < t.matrix.rows(); ++i)
      if (sgn(t.matrix(i, j)) != 0)
        return TensorWitness{t.name, j, t.degrees[j], ctx.products().h.labels[i], t.matrix(i, j)};
  return std::nullopt;
}

FormalityResult formality_verdict(const Dga& a, int n) {
  FormalityResult r;
  if (n < 2) {
    r.reason = "the connectivity parameter must be at least 2";
    return r;
  }
  const Cohomology h(a);
  if (h.top() >= 1 && h.betti(1) != 0) {
    r.reason = "not simply connected (H^1 is nonzero)";
    return r;
  }
  for (int i = 2; i < n && i <= h.top(); ++i)
    if (h.betti(i) != 0) {
      r.reason = "H^" + std::to_string(i) + " is nonzero, so the model is not " + std::to_string(n - 1) + "-connected";
      return r;
    }
  if (auto why = poincare_failure(h)) {
    r.reason = *why;
    return r;
  }
  const int m = a.orientation()->degree;
  if (m > 5 * n - 2) {
    r.reason = "dimension " + std::to_string(m) + " exceeds 5n-2 = " + std::to_string(5 * n - 2);
    return r;
  }

  InvariantContext ctx(a);
  const CochainChoice c = canonical_choice(ctx.cohomology(), ctx.products());
  const ObstructionTensor f = bianchi_massey(ctx, c);
  if (auto w = first_nonzero(ctx, f)) {
    r.verdict = Verdict::NotFormal;
    r.reason = "the Bianchi-Massey tensor is nonzero";
    r.witness = w;
    return r;
  }
  const auto v = find_vanishing_triple_choice(ctx, c);
  if (!v) throw InternalInconsistency("F vanishes but no choice makes the uniform triple product vanish");
  const ObstructionTensor p = pentagonal(ctx, *v);
  if (auto w = first_nonzero(ctx, p)) {
    r.verdict = Verdict::NotFormal;
    r.reason = "the pentagonal Massey tensor is nonzero";
    r.witness = w;
    return r;
  }
  r.verdict = Verdict::Formal;
  r.reason = "F = 0 and P = 0";
  return r;
}

}  // namespace massey
