#pragma once

// Bases of tensor, symmetric and exterior powers (plain and graded), and the
// canonical maps between them that the obstruction tensors are built from.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "massey/qlinalg.hpp"

namespace massey {

// A finite graded basis: element i has degree degrees[i].
struct GradedBasis {
  std::vector<int> degrees;
  std::vector<std::string> labels;

  std::size_t size() const { return degrees.size(); }
  std::vector<std::size_t> of_degree(int d) const;
  int max_degree() const;

  static GradedBasis uniform(std::size_t r, int degree, const std::string& prefix = "v");
};

// Graded basis of a homogeneous subspace (every basis row supported in a single
// degree), one element per row.
GradedBasis subspace_graded(const SubspaceBasis& s, const GradedBasis& ambient,
                            const std::string& prefix);

enum class PowerKind { Tensor, Symmetric, Exterior, GradedSymmetric, GradedAntisymmetric };

using Word = std::vector<std::uint32_t>;

// Result of normalising a word: sign is 0 when the word represents zero (or
// lies above the degree bound of the basis).
struct Located {
  int sign = 0;
  std::size_t index = 0;
};

// Sorts w into canonical order for the given kind and returns the sign picked
// up, or 0 if the word vanishes by a repetition rule.
int canonicalize(Word& w, PowerKind kind, const std::vector<int>& degrees);

class PowerBasis {
 public:
  PowerBasis() = default;
  PowerBasis(GradedBasis base, PowerKind kind, int power, std::optional<int> max_degree = {});

  const GradedBasis& base() const { return base_; }
  PowerKind kind() const { return kind_; }
  int power() const { return power_; }
  std::size_t size() const { return words_.size(); }
  const Word& word(std::size_t i) const { return words_[i]; }
  int degree(std::size_t i) const { return degrees_[i]; }

  Located locate(Word w) const;
  GradedBasis as_graded() const;

 private:
  GradedBasis base_;
  PowerKind kind_ = PowerKind::Tensor;
  int power_ = 0;
  std::vector<Word> words_;
  std::vector<int> degrees_;
  std::map<Word, std::size_t> index_;
};

// Basis of A ⊗ B, pairs in lexicographic order, optionally degree bounded.
class PairBasis {
 public:
  PairBasis() = default;
  PairBasis(GradedBasis a, GradedBasis b, std::optional<int> max_degree = {});

  const GradedBasis& first() const { return a_; }
  const GradedBasis& second() const { return b_; }
  std::size_t size() const { return pairs_.size(); }
  std::pair<std::size_t, std::size_t> pair(std::size_t i) const { return pairs_[i]; }
  int degree(std::size_t i) const { return a_.degrees[pairs_[i].first] + b_.degrees[pairs_[i].second]; }
  // Index of a ⊗ b, or nullopt above the degree bound.
  std::optional<std::size_t> locate(std::size_t a, std::size_t b) const;
  GradedBasis as_graded() const;

 private:
  GradedBasis a_, b_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::int64_t> index_;  // a * |B| + b -> position or -1
};

// A linear map between graded bases.
struct TensorMap {
  GradedBasis domain;
  GradedBasis codomain;
  QMatrix matrix;
};

// Map induced on powers by a degree preserving map f of the underlying spaces
// (f has columns indexed by src.base() and rows by dst.base()).
QMatrix induced_power_map(const PowerBasis& src, const PowerBasis& dst, const QMatrix& f);

// f ⊗ g between pair bases, for degree preserving f and g.
QMatrix induced_pair_map(const PairBasis& src, const PairBasis& dst, const QMatrix& f,
                         const QMatrix& g);

// 𝔪 : H ⊗ 𝒢²𝒢²H → 𝒢³H ⊗ 𝒢²H,
//   q ⊗ (w1 ∧ w2) ↦ (q w1) ⊗ w2 − (−1)^{|w1||w2|} (q w2) ⊗ w1,
// restricted to total degree ≤ max_degree when given.
struct MMap {
  PowerBasis w;         // 𝒢²H
  PowerBasis lambda_w;  // 𝒢²𝒢²H (graded antisymmetric)
  PowerBasis s3;        // 𝒢³H
  PairBasis domain;     // H ⊗ 𝒢²𝒢²H
  PairBasis codomain;   // 𝒢³H ⊗ 𝒢²H
  QMatrix matrix;
  std::optional<int> max_degree;
};
MMap graded_m_map(const GradedBasis& h, std::optional<int> max_degree = {});

// The classical map for V = Q^r, realised as the graded map on r classes of degree 2.
MMap m_map_degree2(std::size_t r);

// R(V) as a subspace of V ⊗ Λ²P²V (the domain of m_map_degree2).
SubspaceBasis compute_R(std::size_t r);

// Cyclic sum of x1 ⊗ (x2x3 ∧ x4x5), in the coordinates of m_map_degree2(r).domain.
QVector star(const MMap& m, const std::vector<QVector>& x);

// Dimension of the GL_r Weyl module for a partition (hook-content formula).
mpz_class weyl_dim(const std::vector<int>& partition, std::size_t r);

mpz_class binomial(long n, long k);

// s : H ⊗ E → 𝒢³H, with E ⊂ 𝒢²H given in coordinates of w.
struct Symmetrization {
  GradedBasis e;     // graded basis of E
  PairBasis domain;  // H ⊗ E
  PowerBasis s3;     // 𝒢³H
  QMatrix matrix;
};
Symmetrization full_symmetrization(const GradedBasis& h, const PowerBasis& w, const SubspaceBasis& e,
                                   std::optional<int> max_degree = {});
SubspaceBasis K_kernel(const Symmetrization& s);

// j : 𝒢²𝒢²H → 𝒢²H ⊗ 𝒢²H, x ∧ y ↦ x ⊗ y − (−1)^{|x||y|} y ⊗ x.
struct JInclusion {
  PairBasis codomain;
  QMatrix matrix;
};
JInclusion j_inclusion(const PowerBasis& w, const PowerBasis& lambda_w);

// Id ⊗ j : H ⊗ 𝒢²𝒢²H → H ⊗ 𝒢²H ⊗ 𝒢²H, with codomain (H ⊗ 𝒢²H) ⊗ 𝒢²H.
struct IdJ {
  PairBasis inner;     // H ⊗ 𝒢²H
  PairBasis codomain;  // (H ⊗ 𝒢²H) ⊗ 𝒢²H
  QMatrix matrix;
};
IdJ id_j(const MMap& m);

// s ⊗ Id : (H ⊗ 𝒢²H) ⊗ 𝒢²H → 𝒢³H ⊗ 𝒢²H.
QMatrix s_id(const MMap& m, const IdJ& idj);

}  // namespace massey
