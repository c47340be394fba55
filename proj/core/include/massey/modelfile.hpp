#pragma once

// The text format for models.
//
//   # comment
//   name <rest of line>
//   cap <int>
//   gen <ident> <degree>            Sullivan generators, in order
//   diff <ident> = <polynomial>     generators without a diff line are closed
//   basis <degree> <label>...       explicit basis (the unit "1" is implicit)
//   product <label> * <label> = <expression>
//   dmatrix <k>                     rows of d : A^k → A^{k+1}, one per line
//   <rational> ...
//   end
//   orient <degree> [<expression>]  fundamental cocycle, optional
//
// Polynomials are sums of terms c * g1 * g2 ^ 2 * ... with c an integer or p/q.
// Generator order within a term is free; the Koszul sign is applied. A file
// with gen lines is a Sullivan algebra (cap 10 unless given), one with basis
// lines an explicit algebra (cap = top basis degree unless given), and an
// empty file the trivial algebra.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "massey/dga.hpp"

namespace massey {

using Resolver = std::function<std::optional<std::size_t>(std::string_view)>;

// Throws std::invalid_argument on malformed input or unknown identifiers.
Polynomial parse_polynomial(std::string_view text, const Resolver& resolve);

// Throws SyntaxError, DegreeMismatch or NotASquareZeroDifferential.
std::unique_ptr<Dga> parse_model(std::string_view text);
std::unique_ptr<Dga> read_model_file(const std::string& path);

std::string serialize_model(const Dga& a);
void write_model_file(const Dga& a, const std::string& path);

// Same kind, name, cap, basis labels, differential, products and orientation.
bool same_model(const Dga& a, const Dga& b);

// An element of A^degree written as a polynomial in the basis labels, the
// inverse of Dga::format. Sullivan algebras also accept any polynomial in the
// generators. Throws std::invalid_argument or DegreeMismatch.
Element parse_element(const Dga& a, int degree, std::string_view text);

}  // namespace massey
