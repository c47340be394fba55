#include "massey/qlinalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace massey {

Rational make_rational(long p, long q) {
  if (q == 0) throw std::invalid_argument("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto valid_int = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("malformed rational literal '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("from_rows: ragged input");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols, std::size_t rows) {
  QMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

QVector QMatrix::column(std::size_t c) const {
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void QMatrix::set_column(std::size_t c, std::span<const Rational> values) {
  if (values.size() != rows_) throw std::invalid_argument("set_column: size mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QVector QMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
  QVector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(v[c]) == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& a = (*this)(r, c);
      if (sgn(a) != 0) out[r] += a * v[c];
    }
  }
  return out;
}

bool QMatrix::is_zero() const { return massey::is_zero(data_); }

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  QMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b(k, j);
        if (sgn(y) != 0) out(i, j) += x * y;
      }
    }
  return out;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  QMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  QMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RrefResult rref(const QMatrix& input) {
  QMatrix m = input;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> nonzero;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    nonzero.clear();
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(m(r, j)) != 0) {
        m(r, j) *= inv;
        nonzero.push_back(j);
      }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j : nonzero) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

SubspaceBasis SubspaceBasis::span(std::size_t ambient_dim, const std::vector<QVector>& vectors) {
  SubspaceBasis s(ambient_dim);
  if (vectors.empty()) return s;
  auto [m, pivots] = rref(QMatrix::from_rows(vectors, ambient_dim));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    auto row = m.row(i);
    s.basis_.emplace_back(row.begin(), row.end());
  }
  s.pivots_ = std::move(pivots);
  return s;
}

SubspaceBasis SubspaceBasis::whole(std::size_t ambient_dim) {
  std::vector<QVector> units;
  for (std::size_t i = 0; i < ambient_dim; ++i) units.push_back(unit_vector(ambient_dim, i));
  return span(ambient_dim, units);
}

QVector SubspaceBasis::reduce(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("reduce: ambient dimension mismatch");
  QVector out(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational f = out[pivots_[i]];
    if (sgn(f) == 0) continue;
    const QVector& b = basis_[i];
    for (std::size_t j = pivots_[i]; j < ambient_; ++j)
      if (sgn(b[j]) != 0) out[j] -= f * b[j];
  }
  return out;
}

bool SubspaceBasis::contains(std::span<const Rational> v) const { return massey::is_zero(reduce(v)); }

std::optional<QVector> SubspaceBasis::coordinates(std::span<const Rational> v) const {
  if (!contains(v)) return std::nullopt;
  QVector c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

QMatrix SubspaceBasis::as_columns() const { return QMatrix::from_columns(basis_, ambient_); }

std::vector<QVector> kernel_vectors(const QMatrix& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

SubspaceBasis kernel_basis(const QMatrix& m) { return SubspaceBasis::span(m.cols(), kernel_vectors(m)); }

SubspaceBasis image_basis(const QMatrix& m) {
  std::vector<QVector> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return SubspaceBasis::span(m.rows(), cols);
}

std::optional<QVector> solve_particular(const QMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve_particular: size mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto [r, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  QVector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r(i, m.cols());
  return x;
}

std::optional<QMatrix> invert(const QMatrix& m) {
  if (m.rows() != m.cols() || rank(m) != m.rows()) return std::nullopt;
  QMatrix out(m.rows(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out.set_column(i, *solve_particular(m, unit_vector(m.rows(), i)));
  return out;
}

SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("sum: ambient dimension mismatch");
  std::vector<QVector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return SubspaceBasis::span(a.ambient_dim(), all);
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  const std::size_t n = a.ambient_dim();
  if (a.empty() || b.empty()) return SubspaceBasis(n);
  // Solve sum_i l_i a_i - sum_j m_j b_j = 0 and map the l-part back.
  QMatrix joint(n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) joint.set_column(i, a[i]);
  for (std::size_t j = 0; j < b.dim(); ++j) joint.set_column(a.dim() + j, scaled(b[j], -1));
  std::vector<QVector> vectors;
  for (const auto& k : kernel_vectors(joint)) {
    QVector v(n);
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (sgn(k[i]) != 0) axpy(v, k[i], a[i]);
    vectors.push_back(std::move(v));
  }
  return SubspaceBasis::span(n, vectors);
}

Quotient::Quotient(SubspaceBasis modulo) : modulo_(std::move(modulo)) {
  std::vector<bool> is_pivot(modulo_.ambient_dim(), false);
  for (auto p : modulo_.pivots()) is_pivot[p] = true;
  for (std::size_t j = 0; j < is_pivot.size(); ++j)
    if (!is_pivot[j]) free_.push_back(j);
}

QVector Quotient::project(std::span<const Rational> v) const {
  QVector reduced = modulo_.reduce(v);
  QVector q(free_.size());
  for (std::size_t i = 0; i < free_.size(); ++i) q[i] = reduced[free_[i]];
  return q;
}

QVector Quotient::lift(std::span<const Rational> q) const {
  if (q.size() != free_.size()) throw std::invalid_argument("lift: size mismatch");
  QVector v(ambient_dim());
  for (std::size_t i = 0; i < free_.size(); ++i) v[free_[i]] = q[i];
  return v;
}

std::vector<QVector> quotient_coords(const std::vector<QVector>& ambient_vectors,
                                     const SubspaceBasis& modulo) {
  Quotient q(modulo);
  std::vector<QVector> out;
  out.reserve(ambient_vectors.size());
  for (const auto& v : ambient_vectors) out.push_back(q.project(v));
  return out;
}

QVector zeros(std::size_t n) { return QVector(n); }

QVector unit_vector(std::size_t n, std::size_t i) {
  QVector v(n);
  v.at(i) = 1;
  return v;
}

void axpy(QVector& y, const Rational& a, std::span<const Rational> x) {
  if (y.size() != x.size()) throw std::invalid_argument("axpy: size mismatch");
  if (sgn(a) == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (sgn(x[i]) != 0) y[i] += a * x[i];
}

QVector scaled(std::span<const Rational> x, const Rational& a) {
  QVector out(x.begin(), x.end());
  for (auto& v : out) v *= a;
  return out;
}

}  // namespace massey

namespace massey {

namespace {

// a − c·b for sparse rows.
SparseRow sparse_axpy(const SparseRow& a, const Rational& c, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -c * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second - c * b[j].second;
      if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

void SparseSystem::add(SparseRow row, const Rational& rhs) {
  if (pivot_.empty()) pivot_.assign(n_, -1);
  std::erase_if(row, [](const auto& e) { return sgn(e.second) == 0; });
  std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  Rational b = rhs;
  while (!row.empty()) {
    const std::int64_t p = pivot_[row.front().first];
    if (p < 0) break;
    const Row& r = rows_[static_cast<std::size_t>(p)];
    const Rational c = row.front().second / r.entries.front().second;
    b -= c * r.rhs;
    row = sparse_axpy(row, c, r.entries);
  }
  if (row.empty()) {
    if (sgn(b) != 0) consistent_ = false;
    return;
  }
  pivot_[row.front().first] = static_cast<std::int64_t>(rows_.size());
  rows_.push_back({std::move(row), std::move(b)});
}

QVector SparseSystem::back_substitute(const QVector& seed, bool with_rhs) const {
  QVector x = seed;
  for (std::size_t col = n_; col-- > 0;) {
    if (pivot_.empty() || pivot_[col] < 0) continue;
    const Row& r = rows_[static_cast<std::size_t>(pivot_[col])];
    Rational v = with_rhs ? r.rhs : Rational(0);
    for (std::size_t k = 1; k < r.entries.size(); ++k) v -= r.entries[k].second * x[r.entries[k].first];
    x[col] = v / r.entries.front().second;
  }
  return x;
}

std::optional<QVector> SparseSystem::particular() const {
  if (!consistent_) return std::nullopt;
  return back_substitute(QVector(n_), true);
}

std::vector<QVector> SparseSystem::kernel() const {
  std::vector<QVector> out;
  for (std::size_t f = 0; f < n_; ++f) {
    if (!pivot_.empty() && pivot_[f] >= 0) continue;
    QVector seed(n_);
    seed[f] = 1;
    out.push_back(back_substitute(seed, false));
  }
  return out;
}

}  // namespace massey
