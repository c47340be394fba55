#include "massey/map_calculus.hpp"

#include <algorithm>
#include <numeric>

namespace massey {

namespace {

bool odd(int d) { return (d & 1) != 0; }

mpz_class factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Koszul sign of reordering letters with degrees deg into the order perm.
int rearrangement_sign(const std::vector<int>& perm, const std::vector<int>& deg, bool with_sign) {
  int s = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) {
        if (odd(deg[perm[i]]) && odd(deg[perm[j]])) s = -s;
        if (with_sign) s = -s;
      }
  return s;
}

AlgebraMap product(const Dga& a, const AlgebraMap& f, const AlgebraMap& g, std::optional<int> max_degree, bool alt) {
  if (f.domain.base().degrees != g.domain.base().degrees)
    throw std::invalid_argument("map product: domains over different spaces");
  const int p = f.domain.power(), q = g.domain.power(), n = p + q;
  AlgebraMap out;
  out.domain = PowerBasis(f.domain.base(), alt ? PowerKind::GradedAntisymmetric : PowerKind::GradedSymmetric, n,
                          max_degree);
  out.shift = f.shift + g.shift;
  const Rational norm(mpz_class(1), factorial(p) * factorial(q));
  const auto& bdeg = f.domain.base().degrees;
  for (std::size_t i = 0; i < out.domain.size(); ++i) {
    const Word& w = out.domain.word(i);
    std::vector<int> deg(n);
    for (int t = 0; t < n; ++t) deg[t] = bdeg[w[t]];
    Element value = a.zero(out.domain.degree(i) + out.shift);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Word left, right;
      int left_deg = 0;
      for (int t = 0; t < p; ++t) {
        left.push_back(w[perm[t]]);
        left_deg += deg[perm[t]];
      }
      for (int t = p; t < n; ++t) right.push_back(w[perm[t]]);
      int sign = rearrangement_sign(perm, deg, alt);
      if (odd(g.shift) && odd(left_deg)) sign = -sign;
      const Element fv = f.evaluate(a, left);
      if (fv.is_zero()) continue;
      const Element gv = g.evaluate(a, right);
      if (gv.is_zero()) continue;
      add_scaled(value, norm * sign, a.multiply(fv, gv));
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.values.push_back(std::move(value));
  }
  return out;
}

}  // namespace

Element AlgebraMap::evaluate(const Dga& a, const Word& w) const {
  int deg = shift;
  for (auto x : w) deg += domain.base().degrees[x];
  const Located loc = domain.locate(w);
  if (loc.sign == 0) return a.zero(deg);
  return loc.sign == 1 ? values[loc.index] : Rational(-1) * values[loc.index];
}

AlgebraMap linear_map(const GradedBasis& v, int shift, std::vector<Element> values) {
  if (values.size() != v.size()) throw std::invalid_argument("linear_map: one value per basis element needed");
  for (std::size_t i = 0; i < v.size(); ++i)
    if (values[i].degree != v.degrees[i] + shift) throw DegreeMismatch("linear_map: value of wrong degree");
  return {PowerBasis(v, PowerKind::GradedSymmetric, 1), shift, std::move(values)};
}

AlgebraMap map_sym_product(const Dga& a, const AlgebraMap& f, const AlgebraMap& g, std::optional<int> max_degree) {
  return product(a, f, g, max_degree, false);
}

AlgebraMap map_alt_product(const Dga& a, const AlgebraMap& f, const AlgebraMap& g, std::optional<int> max_degree) {
  return product(a, f, g, max_degree, true);
}

AlgebraMap map_power(const Dga& a, const AlgebraMap& f, int p, std::optional<int> max_degree) {
  if (f.domain.power() != 1) throw std::invalid_argument("map_power: needs a map on V");
  const int r = f.shift;
  AlgebraMap out;
  out.domain = PowerBasis(f.domain.base(), odd(r) ? PowerKind::GradedAntisymmetric : PowerKind::GradedSymmetric, p,
                          max_degree);
  out.shift = p * r;
  const auto& bdeg = f.domain.base().degrees;
  for (std::size_t i = 0; i < out.domain.size(); ++i) {
    const Word& w = out.domain.word(i);
    Element value = a.unit();
    int exponent = 0;
    for (int t = 0; t < p; ++t) {
      value = a.multiply(value, f.values[w[t]]);
      exponent += (p - 1 - t) * bdeg[w[t]];
    }
    if (odd(r) && odd(exponent)) value = Rational(-1) * value;
    out.values.push_back(std::move(value));
  }
  return out;
}

AlgebraMap map_differential(const Dga& a, const AlgebraMap& f) {
  AlgebraMap out{f.domain, f.shift + 1, {}};
  for (const auto& v : f.values) out.values.push_back(a.differential(v));
  return out;
}

AlgebraMap map_add(const AlgebraMap& f, const AlgebraMap& g, const Rational& c) {
  if (f.shift != g.shift || f.values.size() != g.values.size())
    throw std::invalid_argument("map_add: incompatible maps");
  AlgebraMap out = f;
  for (std::size_t i = 0; i < out.values.size(); ++i) add_scaled(out.values[i], c, g.values[i]);
  return out;
}

bool operator==(const AlgebraMap& f, const AlgebraMap& g) {
  if (f.shift != g.shift || f.values.size() != g.values.size()) return false;
  for (std::size_t i = 0; i < f.values.size(); ++i)
    if (f.domain.word(i) != g.domain.word(i) || f.values[i] != g.values[i]) return false;
  return true;
}

}  // namespace massey
