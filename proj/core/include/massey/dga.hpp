#pragma once

// Finite presentations of commutative differential graded algebras over Q.
// Two variants share one interface: free graded-commutative (Sullivan) algebras
// truncated at a degree cap, and algebras given by an explicit basis with
// structure constants.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "massey/errors.hpp"
#include "massey/multilinear.hpp"
#include "massey/qlinalg.hpp"

namespace massey {

// A homogeneous element: coordinates in the basis of A^degree.
struct Element {
  int degree = 0;
  QVector coeffs;

  bool is_zero() const { return massey::is_zero(coeffs); }
  friend bool operator==(const Element&, const Element&) = default;
};

using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator*(const Rational& c, const Element& a);
Element& operator+=(Element& a, const Element& b);
void add_scaled(Element& a, const Rational& c, const Element& b);

struct Orientation {
  int degree = 0;
  // A cocycle whose class evaluates to 1; when absent the first basis class of
  // H^degree does.
  std::optional<QVector> fundamental;
};

class Dga {
 public:
  virtual ~Dga() = default;

  const std::string& name() const { return name_; }
  int cap() const { return cap_; }
  // Sullivan algebras are truncations of an infinite algebra, so nothing can be
  // said above the cap. Explicit algebras are zero there.
  virtual bool truncating() const = 0;
  // Highest degree in which cohomology is determined.
  int cohomology_top() const { return truncating() ? cap_ - 1 : cap_; }

  std::size_t dim(int k) const;
  const std::vector<std::string>& labels(int k) const;

  Element zero(int k) const;
  Element basis_element(int k, std::size_t i) const;
  Element unit() const { return basis_element(0, 0); }

  Element multiply(const Element& a, const Element& b) const;
  Element differential(const Element& a) const;
  // Matrix of d : A^k → A^{k+1}.
  const QMatrix& d_matrix(int k) const;
  virtual SparseVec basis_product(int p, std::size_t i, int q, std::size_t j) const = 0;

  const std::optional<Orientation>& orientation() const { return orientation_; }
  void set_orientation(Orientation o) { orientation_ = std::move(o); }

  std::string format(const Element& a) const;

 protected:
  void check_degree(int k) const;

  std::string name_;
  int cap_ = 0;
  std::vector<std::vector<std::string>> labels_;
  std::vector<QMatrix> d_;
  std::optional<Orientation> orientation_;
};

struct Generator {
  std::string name;
  int degree = 0;
};

// Sum of coefficient × (product of generators, in the order listed).
using Polynomial = std::vector<std::pair<Rational, std::vector<std::size_t>>>;

class SullivanAlgebra : public Dga {
 public:
  SullivanAlgebra(std::string name, std::vector<Generator> generators, std::vector<Polynomial> differentials,
                  int cap);

  bool truncating() const override { return true; }
  SparseVec basis_product(int p, std::size_t i, int q, std::size_t j) const override;

  const std::vector<Generator>& generators() const { return gens_; }
  std::optional<std::size_t> generator_index(const std::string& name) const;
  Element generator(std::size_t g) const;
  // The product g_1 ⋯ g_k in the given order.
  Element monomial(const std::vector<std::size_t>& gens) const;
  Element polynomial(const Polynomial& p, int degree) const;
  const Polynomial& generator_differential(std::size_t g) const { return diffs_[g]; }
  const Word& monomial_word(int k, std::size_t i) const { return words_.at(k).at(i); }
  std::size_t monomial_count(int k) const { return dim(k); }

 private:
  Located locate(Word w) const;

  std::vector<Generator> gens_;
  std::vector<Polynomial> diffs_;
  std::vector<int> gen_degrees_;
  std::vector<std::vector<Word>> words_;
  std::vector<std::map<Word, std::size_t>> index_;
};

class ExplicitAlgebra : public Dga {
 public:
  struct ProductRule {
    int p;
    std::size_t i;
    int q;
    std::size_t j;
    SparseVec value;
  };

  // basis[0] must be the single unit; d[k] is A^k → A^{k+1} (missing entries are zero).
  ExplicitAlgebra(std::string name, int cap, std::vector<std::vector<std::string>> basis,
                  const std::vector<ProductRule>& products, std::vector<QMatrix> d);

  bool truncating() const override { return false; }
  SparseVec basis_product(int p, std::size_t i, int q, std::size_t j) const override;

  std::optional<std::pair<int, std::size_t>> find_basis(const std::string& label) const;
  const std::map<std::pair<std::size_t, std::size_t>, SparseVec>& product_table() const { return table_; }
  std::size_t global_index(int k, std::size_t i) const { return offset_[k] + i; }

 private:
  void validate() const;

  std::vector<std::size_t> offset_;
  std::map<std::pair<std::size_t, std::size_t>, SparseVec> table_;
};

// Structural self-checks shared by tests: d² = 0, Leibniz, graded commutativity
// and associativity on basis elements up to max_degree (all degrees by default).
void check_structure(const Dga& a, std::optional<int> max_degree = {});

}  // namespace massey
