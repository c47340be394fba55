#pragma once

// Formality of an oriented Poincaré duality model of dimension m ≤ 5n − 2
// whose cohomology vanishes in degrees 1..n−1 (n ≥ 2): formal exactly when ℱ
// vanishes and 𝒫 vanishes for a choice with 𝒯 = 0.

#include <optional>
#include <string>

#include "massey/invariants.hpp"

namespace massey {

enum class Verdict { Formal, NotFormal, NotApplicable };

std::string to_string(Verdict v);

// First nonzero entry of an obstruction tensor.
struct TensorWitness {
  std::string tensor;      // "F" or "P"
  std::size_t column = 0;  // domain basis vector
  int domain_degree = 0;
  std::string class_label;
  Rational value;
};

struct FormalityResult {
  Verdict verdict = Verdict::NotApplicable;
  std::string reason;
  std::optional<TensorWitness> witness;
};

// Empty when the cohomology satisfies Poincaré duality in the orientation
// degree, else the reason it does not.
std::optional<std::string> poincare_failure(const Cohomology& h);

std::optional<TensorWitness> first_nonzero(const InvariantContext& ctx, const ObstructionTensor& t);

FormalityResult formality_verdict(const Dga& a, int n);

}  // namespace massey
