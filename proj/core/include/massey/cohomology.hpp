#pragma once

// Reduced cohomology H^{>0} of a Dga, with a deterministic section α.
//
// In each degree the cocycles are projected to A^k / B^k (complement = the
// non-pivot columns of the boundary space); the echelon basis of that image,
// lifted back, gives the representatives. Class coordinates are read off at
// the echelon pivots.

#include <optional>
#include <vector>

#include "massey/dga.hpp"

namespace massey {

class Cohomology {
 public:
  explicit Cohomology(const Dga& dga);

  const Dga& dga() const { return *dga_; }
  int top() const { return top_; }
  std::size_t betti(int k) const;
  // All classes of degree 1..top, labelled h<degree>_<index>.
  const GradedBasis& basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  std::size_t offset(int k) const;
  const Element& representative(std::size_t global) const { return reps_.at(global); }
  // α applied to a global class vector.
  Element representative(const QVector& cls, int degree) const;

  // Coordinates in H^k of a closed element of degree k. Throws NotClosed.
  QVector class_of(const Element& z) const;
  // Same, embedded in the global coordinates of basis().
  QVector global_class_of(const Element& z) const;
  bool is_closed(const Element& z) const;
  bool is_exact(const Element& z) const;
  // Some x with dx = z (free variables zero), if z is exact.
  std::optional<Element> primitive(const Element& z) const;

  // Cup product of two global classes, in global coordinates.
  QVector cup(std::size_t a, std::size_t b) const;

 private:
  struct Degree {
    SubspaceBasis boundaries;
    Quotient quotient;
    SubspaceBasis cycles;  // image of the cocycles in quotient coordinates
  };

  const Dga* dga_;
  int top_;
  std::vector<Degree> degrees_;
  std::vector<std::size_t> offsets_;
  GradedBasis basis_;
  std::vector<Element> reps_;
};

}  // namespace massey
