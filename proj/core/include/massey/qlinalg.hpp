#pragma once

// Exact linear algebra over the rationals.
//
// Every kernel, image, section and quotient in the library goes through the
// routines in this header. Matrices are dense; elimination skips zero entries,
// which keeps the cost proportional to the fill of the (typically very sparse)
// structure matrices that arise from tensor bases.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace massey {

// Arbitrary-precision fraction, always kept in lowest terms.
using Rational = mpq_class;
using QVector = std::vector<Rational>;

// Builds p/q in canonical form.
Rational make_rational(long p, long q = 1);

// Renders "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& x);

// Parses an integer or "p/q" literal; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

bool is_zero(std::span<const Rational> v);

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);
  static QMatrix from_columns(const std::vector<QVector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  QVector column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Rational> values);

  QMatrix transpose() const;
  QVector apply(std::span<const Rational> v) const;
  bool is_zero() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  QMatrix matrix;
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form. Leading entries are 1 and the pivot of each row
// is its first nonzero column.
RrefResult rref(const QMatrix& m);
std::size_t rank(const QMatrix& m);

// A subspace of Q^n stored as the nonzero rows of a reduced echelon matrix,
// so two subspaces are equal exactly when their bases compare equal.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  explicit SubspaceBasis(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static SubspaceBasis span(std::size_t ambient_dim, const std::vector<QVector>& vectors);
  static SubspaceBasis whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool empty() const { return basis_.empty(); }
  const std::vector<QVector>& basis() const { return basis_; }
  const QVector& operator[](std::size_t i) const { return basis_[i]; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Rational> v) const;
  // Coordinates of v in the stored basis; nullopt when v is not in the span.
  std::optional<QVector> coordinates(std::span<const Rational> v) const;
  // Subtracts the span's component along the pivot columns.
  QVector reduce(std::span<const Rational> v) const;
  // Columns are the basis vectors.
  QMatrix as_columns() const;

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<QVector> basis_;
  std::vector<std::size_t> pivots_;
};

// Null space of m, as a subspace of Q^{cols}.
SubspaceBasis kernel_basis(const QMatrix& m);

// Null space basis in the free-column convention: one vector per free column
// f with a 1 in position f and zeros in the other free positions.
std::vector<QVector> kernel_vectors(const QMatrix& m);

// Column space of m, as a subspace of Q^{rows}.
SubspaceBasis image_basis(const QMatrix& m);

// The solution of m x = b with every free variable set to zero, if any.
std::optional<QVector> solve_particular(const QMatrix& m, std::span<const Rational> b);
// Inverse of a square matrix, absent when it is singular.
std::optional<QMatrix> invert(const QMatrix& m);

// Throws std::invalid_argument on ambient dimension mismatch.
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b);

// Projection of Q^n onto Q^n / S. The complement is spanned by the standard
// vectors at the non-pivot columns of S, so quotient coordinates are read off
// after reducing against S.
class Quotient {
 public:
  Quotient() = default;
  explicit Quotient(SubspaceBasis modulo);

  std::size_t ambient_dim() const { return modulo_.ambient_dim(); }
  std::size_t dim() const { return free_.size(); }
  const SubspaceBasis& modulo() const { return modulo_; }
  const std::vector<std::size_t>& complement_columns() const { return free_; }

  QVector project(std::span<const Rational> v) const;
  // The representative with zeros on the pivot columns of the modulus.
  QVector lift(std::span<const Rational> q) const;

 private:
  SubspaceBasis modulo_;
  std::vector<std::size_t> free_;
};

// quotient_coords: coordinates of each vector in the complement of `modulo`.
std::vector<QVector> quotient_coords(const std::vector<QVector>& ambient_vectors,
                                     const SubspaceBasis& modulo);

// Small vector helpers.
QVector zeros(std::size_t n);
QVector unit_vector(std::size_t n, std::size_t i);
void axpy(QVector& y, const Rational& a, std::span<const Rational> x);
QVector scaled(std::span<const Rational> x, const Rational& a);

// Sparse row as (column, value) pairs in increasing column order.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

// Incrementally built echelon form of a linear system A x = b with sparse rows,
// for systems too large for dense elimination. Each stored row has a distinct
// leading column and no entries left of it.
class SparseSystem {
 public:
  explicit SparseSystem(std::size_t unknowns) : n_(unknowns) {}

  std::size_t unknowns() const { return n_; }
  std::size_t rank() const { return rows_.size(); }
  bool consistent() const { return consistent_; }

  // Adds the equation row · x = rhs.
  void add(SparseRow row, const Rational& rhs = 0);

  // The solution with every free unknown zero, if the system is consistent.
  std::optional<QVector> particular() const;
  // Null space in the free-column convention.
  std::vector<QVector> kernel() const;

 private:
  QVector back_substitute(const QVector& seed, bool with_rhs) const;

  struct Row {
    SparseRow entries;  // entries[0] is the leading one
    Rational rhs;
  };
  std::size_t n_;
  std::vector<std::int64_t> pivot_;  // column -> row index or -1
  std::vector<Row> rows_;
  bool consistent_ = true;
};

}  // namespace massey
