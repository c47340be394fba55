#include "massey/cohomology.hpp"

namespace massey {

Cohomology::Cohomology(const Dga& dga) : dga_(&dga), top_(dga.cohomology_top()) {
  degrees_.resize(std::max(top_, 0) + 1);
  offsets_.assign(std::max(top_, 0) + 2, 0);
  for (int k = 1; k <= top_; ++k) {
    Degree& deg = degrees_[k];
    const std::size_t n = dga.dim(k);
    deg.boundaries = image_basis(dga.d_matrix(k - 1));
    if (deg.boundaries.ambient_dim() != n) deg.boundaries = SubspaceBasis(n);
    deg.quotient = Quotient(deg.boundaries);
    const QMatrix& d = dga.d_matrix(k);
    std::vector<QVector> cycles =
        d.rows() == 0 ? SubspaceBasis::whole(n).basis() : kernel_basis(d).basis();
    for (auto& z : cycles) z = deg.quotient.project(z);
    deg.cycles = SubspaceBasis::span(deg.quotient.dim(), cycles);
    offsets_[k] = basis_.size();
    for (std::size_t i = 0; i < deg.cycles.dim(); ++i) {
      basis_.degrees.push_back(k);
      basis_.labels.push_back("h" + std::to_string(k) + "_" + std::to_string(i));
      reps_.push_back({k, deg.quotient.lift(deg.cycles[i])});
    }
  }
  offsets_[std::max(top_, 0) + 1] = basis_.size();
}

std::size_t Cohomology::betti(int k) const {
  if (k < 1) return 0;
  if (k > top_) {
    if (dga_->truncating()) throw DegreeCapExceeded(k + 1, dga_->cap());
    return 0;
  }
  return degrees_[k].cycles.dim();
}

std::size_t Cohomology::offset(int k) const {
  if (k < 1) return 0;
  if (k > top_) return basis_.size();
  return offsets_[k];
}

Element Cohomology::representative(const QVector& cls, int degree) const {
  Element out = dga_->zero(degree);
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (sgn(cls[i]) == 0) continue;
    if (basis_.degrees[i] != degree) throw DegreeMismatch("class vector is not homogeneous");
    add_scaled(out, cls[i], reps_[i]);
  }
  return out;
}

bool Cohomology::is_closed(const Element& z) const { return dga_->differential(z).is_zero(); }

QVector Cohomology::class_of(const Element& z) const {
  const int k = z.degree;
  if (k < 1 || k > top_) {
    if (k > top_ && dga_->truncating()) throw DegreeCapExceeded(k + 1, dga_->cap());
    if (k > top_) return {};
    throw DegreeMismatch("class_of is only defined in positive degrees");
  }
  if (!is_closed(z)) throw NotClosed("element of degree " + std::to_string(k) + " is not closed");
  const Degree& deg = degrees_[k];
  auto c = deg.cycles.coordinates(deg.quotient.project(z.coeffs));
  if (!c) throw InternalInconsistency("closed element outside the cocycle space");
  return *c;
}

QVector Cohomology::global_class_of(const Element& z) const {
  QVector out(basis_.size());
  const QVector local = class_of(z);
  const std::size_t off = offset(z.degree);
  for (std::size_t i = 0; i < local.size(); ++i) out[off + i] = local[i];
  return out;
}

bool Cohomology::is_exact(const Element& z) const {
  if (z.degree < 1) return z.is_zero();
  if (z.degree > top_) {
    if (dga_->truncating()) throw DegreeCapExceeded(z.degree + 1, dga_->cap());
    return true;
  }
  return is_closed(z) && degrees_[z.degree].boundaries.contains(z.coeffs);
}

std::optional<Element> Cohomology::primitive(const Element& z) const {
  if (z.coeffs.empty()) return dga_->zero(z.degree - 1);
  const QMatrix& d = dga_->d_matrix(z.degree - 1);
  if (d.cols() == 0) {
    if (z.is_zero()) return dga_->zero(z.degree - 1);
    return std::nullopt;
  }
  auto x = solve_particular(d, z.coeffs);
  if (!x) return std::nullopt;
  return Element{z.degree - 1, std::move(*x)};
}

QVector Cohomology::cup(std::size_t a, std::size_t b) const {
  const Element p = dga_->multiply(reps_.at(a), reps_.at(b));
  if (p.degree > top_) {
    if (dga_->truncating()) throw DegreeCapExceeded(p.degree + 1, dga_->cap());
    return QVector(basis_.size());
  }
  return global_class_of(p);
}

}  // namespace massey
