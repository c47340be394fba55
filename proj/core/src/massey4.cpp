#include "massey/massey4.hpp"

#include "massey/errors.hpp"

namespace massey {

namespace {

int bar_sign(int degree) { return degree % 2 != 0 ? 1 : -1; }

Element alpha_of(const InvariantContext& ctx, const CochainChoice& c, std::span<const Rational> x, int degree) {
  Element out = ctx.dga().zero(degree);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) add_scaled(out, x[i], c.alpha[i]);
  return out;
}

// E coordinates of x·y, or NotDefined if the product is nonzero in H.
QVector e_coords(const InvariantContext& ctx, std::span<const Rational> x, std::span<const Rational> y,
                 const std::string& what) {
  const auto coords = ctx.products().e.coordinates(w_product(ctx, x, y));
  if (!coords) throw NotDefined(what + " is not zero in cohomology");
  return *coords;
}

Element gamma_of(const InvariantContext& ctx, const CochainChoice& c, const QVector& e, int degree) {
  Element out = ctx.dga().zero(degree);
  for (std::size_t j = 0; j < e.size(); ++j)
    if (sgn(e[j]) != 0) add_scaled(out, e[j], c.gamma[j]);
  return out;
}

}  // namespace

int class_degree(const InvariantContext& ctx, std::span<const Rational> x) {
  const GradedBasis& h = ctx.products().h;
  if (x.size() != h.size()) throw DegreeMismatch("class vector has the wrong length");
  int d = -1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    if (d >= 0 && h.degrees[i] != d) throw DegreeMismatch("class vector is not homogeneous");
    d = h.degrees[i];
  }
  if (d < 0) throw DegreeMismatch("zero class has no degree");
  return d;
}

QVector w_product(const InvariantContext& ctx, std::span<const Rational> x, std::span<const Rational> y) {
  const PowerBasis& w = ctx.products().w;
  QVector out = zeros(w.size());
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (sgn(x[a]) == 0) continue;
    for (std::size_t b = 0; b < y.size(); ++b) {
      if (sgn(y[b]) == 0) continue;
      const Located l = w.locate({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
      if (l.sign != 0) out[l.index] += l.sign * x[a] * y[b];
    }
  }
  return out;
}

QVector cup_classes(const InvariantContext& ctx, std::span<const Rational> x, std::span<const Rational> y) {
  return ctx.products().product.apply(w_product(ctx, x, y));
}

MasseyFourfold fourfold_massey(const InvariantContext& ctx, const CochainChoice& c, const std::array<QVector, 4>& x) {
  const Dga& a = ctx.dga();
  const Cohomology& h = ctx.cohomology();
  std::array<int, 4> deg{};
  for (int i = 0; i < 4; ++i) deg[i] = class_degree(ctx, x[i]);
  std::array<Element, 4> al;
  for (int i = 0; i < 4; ++i) al[i] = alpha_of(ctx, c, x[i], deg[i]);

  MasseyFourfold m;
  for (int i = 0; i < 3; ++i) {
    const std::string what = "x" + std::to_string(i + 1) + "·x" + std::to_string(i + 2);
    const QVector e = e_coords(ctx, x[i], x[i + 1], what);
    m.gamma[i] = Rational(bar_sign(deg[i])) * gamma_of(ctx, c, e, deg[i] + deg[i + 1] - 1);
  }
  // ā for a of degree d.
  auto bar = [&](const Element& e) { return Rational(bar_sign(e.degree)) * e; };

  const Element z1 = a.multiply(bar(al[0]), m.gamma[1]) + a.multiply(bar(m.gamma[0]), al[2]);
  const Element z2 = a.multiply(bar(al[1]), m.gamma[2]) + a.multiply(bar(m.gamma[1]), al[3]);
  auto s1 = h.primitive(z1);
  if (!s1) throw NotDefined("the triple product <x1, x2, x3> does not vanish with this choice");
  auto s2 = h.primitive(z2);
  if (!s2) throw NotDefined("the triple product <x2, x3, x4> does not vanish with this choice");
  m.sigma1 = std::move(*s1);
  m.sigma2 = std::move(*s2);

  const Element rep = a.multiply(bar(al[0]), m.sigma2) + a.multiply(bar(m.gamma[0]), m.gamma[2]) +
                      a.multiply(bar(m.sigma1), al[3]);
  m.degree = rep.degree;
  m.value = closed_class(ctx, rep, "the fourfold Massey cochain");

  std::vector<QVector> amb;
  const GradedBasis& hb = ctx.products().h;
  const std::size_t n = hb.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (hb.degrees[i] == m.degree - deg[0]) amb.push_back(cup_classes(ctx, x[0], unit_vector(n, i)));
    if (hb.degrees[i] == m.degree - deg[3]) amb.push_back(cup_classes(ctx, unit_vector(n, i), x[3]));
  }
  m.ambiguity = SubspaceBasis::span(n, amb);
  return m;
}

MasseyTimesFifth massey_times_fifth(const InvariantContext& ctx, const CochainChoice& c,
                                    const std::array<QVector, 5>& x) {
  MasseyTimesFifth out;
  out.product = fourfold_massey(ctx, c, {x[0], x[1], x[2], x[3]});
  out.value = cup_classes(ctx, out.product.value, x[4]);
  out.independent = true;
  for (const auto& v : out.product.ambiguity.basis())
    if (!is_zero(cup_classes(ctx, v, x[4]))) out.independent = false;
  return out;
}

QVector ordinary_element(const InvariantContext& ctx, const std::array<QVector, 5>& x) {
  std::array<QVector, 5> e;
  for (int i = 0; i < 5; ++i) {
    const int j = (i + 1) % 5;
    const auto coords = ctx.products().e.coordinates(w_product(ctx, x[i], x[j]));
    if (!coords)
      throw NotOrdinary("x" + std::to_string(i + 1) + "·x" + std::to_string(j + 1) + " is not zero in cohomology");
    e[i] = *coords;
  }
  const PowerBasis& lam = ctx.lambda_e();
  QVector out = zeros(ctx.h_lambda_e().size());
  for (int i = 0; i < 5; ++i) {
    // x_i ⊗ (x_{i+1}x_{i+2} ∧ x_{i+3}x_{i+4})
    const QVector& q = x[i];
    const QVector& u = e[(i + 1) % 5];
    const QVector& v = e[(i + 3) % 5];
    for (std::size_t s = 0; s < u.size(); ++s) {
      if (sgn(u[s]) == 0) continue;
      for (std::size_t t = 0; t < v.size(); ++t) {
        if (sgn(v[t]) == 0) continue;
        const Located l = lam.locate({static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(t)});
        if (l.sign == 0) continue;
        for (std::size_t k = 0; k < q.size(); ++k) {
          if (sgn(q[k]) == 0) continue;
          const auto idx = ctx.h_lambda_e().locate(k, l.index);
          if (!idx) throw DegreeCapExceeded(ctx.through() + 1, ctx.dga().cap());
          out[*idx] += l.sign * q[k] * u[s] * v[t];
        }
      }
    }
  }
  if (!ctx.d().contains(out)) throw InternalInconsistency("⋆(x1..x5) is not in 𝒟");
  return out;
}

OrdinaryComparison compare_with_pentagonal(const InvariantContext& ctx, const CochainChoice& c,
                                           const std::array<QVector, 5>& x) {
  OrdinaryComparison out;
  const QVector star = ordinary_element(ctx, x);
  const ObstructionTensor p = pentagonal(ctx, c);
  out.pentagonal = p.matrix.apply(*ctx.d().coordinates(star));
  out.massey = massey_times_fifth(ctx, c, x).value;
  out.equal = out.massey == out.pentagonal;
  return out;
}

}  // namespace massey
