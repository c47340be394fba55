#pragma once

// Products of algebra-valued maps on graded symmetric and antisymmetric powers.
//
// A map 𝒢^p V → A is stored by its values on the canonical words of a
// PowerBasis; evaluating on any other ordering of the letters applies the
// (anti)symmetry sign. Sign conventions:
//   (fg)(x_1..x_{p+q}) = 1/(p!q!) Σ_σ ε(σ) (−1)^{s(d_σ1+..+d_σp)} f(x_σ1..x_σp) g(x_σ(p+1)..)
// with ε the Koszul sign of the rearrangement (times sign σ for the wedge
// product), and for f : V → A of degree r,
//   f^p(x_1..x_p) = (−1)^{r Σ_i (p−i) d_i} f(x_1) ⋯ f(x_p),
// so that ff = 2f² and f∧f = 2f².

#include <optional>
#include <vector>

#include "massey/dga.hpp"
#include "massey/multilinear.hpp"

namespace massey {

struct AlgebraMap {
  PowerBasis domain;
  int shift = 0;
  std::vector<Element> values;

  // Value on the letters w (in any order) of the domain's base.
  Element evaluate(const Dga& a, const Word& w) const;
};

// A map V → A given by its values on the basis of V.
AlgebraMap linear_map(const GradedBasis& v, int shift, std::vector<Element> values);

AlgebraMap map_sym_product(const Dga& a, const AlgebraMap& f, const AlgebraMap& g,
                           std::optional<int> max_degree = {});
AlgebraMap map_alt_product(const Dga& a, const AlgebraMap& f, const AlgebraMap& g,
                           std::optional<int> max_degree = {});
AlgebraMap map_power(const Dga& a, const AlgebraMap& f, int p, std::optional<int> max_degree = {});
AlgebraMap map_differential(const Dga& a, const AlgebraMap& f);
AlgebraMap map_add(const AlgebraMap& f, const AlgebraMap& g, const Rational& c = 1);

bool operator==(const AlgebraMap& f, const AlgebraMap& g);

}  // namespace massey
