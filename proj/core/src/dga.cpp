#include "massey/dga.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace massey {

namespace {

int koszul(int p, int q) { return ((p & 1) && (q & 1)) ? -1 : 1; }

void require_same_degree(const Element& a, const Element& b) {
  if (a.degree != b.degree || a.coeffs.size() != b.coeffs.size())
    throw DegreeMismatch("elements of degree " + std::to_string(a.degree) + " and " + std::to_string(b.degree) +
                         " cannot be added");
}

}  // namespace

Element operator+(const Element& a, const Element& b) {
  Element out = a;
  out += b;
  return out;
}

Element operator-(const Element& a, const Element& b) {
  Element out = a;
  add_scaled(out, -1, b);
  return out;
}

Element operator*(const Rational& c, const Element& a) { return {a.degree, scaled(a.coeffs, c)}; }

Element& operator+=(Element& a, const Element& b) {
  add_scaled(a, 1, b);
  return a;
}

void add_scaled(Element& a, const Rational& c, const Element& b) {
  require_same_degree(a, b);
  axpy(a.coeffs, c, b.coeffs);
}

void Dga::check_degree(int k) const {
  if (k > cap_ && truncating()) throw DegreeCapExceeded(k, cap_);
}

std::size_t Dga::dim(int k) const {
  if (k < 0) return 0;
  check_degree(k);
  return k > cap_ ? 0 : labels_[k].size();
}

const std::vector<std::string>& Dga::labels(int k) const {
  static const std::vector<std::string> none;
  if (k < 0) return none;
  check_degree(k);
  return k > cap_ ? none : labels_[k];
}

Element Dga::zero(int k) const { return {k, QVector(dim(k))}; }

Element Dga::basis_element(int k, std::size_t i) const {
  Element e = zero(k);
  e.coeffs.at(i) = 1;
  return e;
}

Element Dga::multiply(const Element& a, const Element& b) const {
  const int k = a.degree + b.degree;
  Element out = zero(k);
  if (out.coeffs.empty()) return out;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (sgn(a.coeffs[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      if (sgn(b.coeffs[j]) == 0) continue;
      const Rational c = a.coeffs[i] * b.coeffs[j];
      for (const auto& [idx, v] : basis_product(a.degree, i, b.degree, j)) out.coeffs[idx] += c * v;
    }
  }
  return out;
}

Element Dga::differential(const Element& a) const {
  const QMatrix& d = d_matrix(a.degree);
  if (d.rows() == 0) return zero(a.degree + 1);
  return {a.degree + 1, d.apply(a.coeffs)};
}

const QMatrix& Dga::d_matrix(int k) const {
  static const QMatrix none;
  if (k < 0) return none;
  check_degree(k + 1);
  if (k >= static_cast<int>(d_.size())) return none;
  return d_[k];
}

std::string Dga::format(const Element& a) const {
  const auto& names = labels(a.degree);
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    const Rational& c = a.coeffs[i];
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = names[i] == "1";
    if (mag != 1 || unit) out << mag.get_str() << (unit ? "" : "*");
    if (!unit) out << names[i];
  }
  if (first) out << "0";
  return out.str();
}

SullivanAlgebra::SullivanAlgebra(std::string name, std::vector<Generator> generators,
                                 std::vector<Polynomial> differentials, int cap)
    : gens_(std::move(generators)), diffs_(std::move(differentials)) {
  name_ = std::move(name);
  cap_ = cap;
  if (cap_ < 0) throw std::invalid_argument("negative degree cap");
  diffs_.resize(gens_.size());
  std::set<std::string> seen;
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    if (gens_[g].degree < 1) throw DegreeMismatch("generator " + gens_[g].name + " must have positive degree");
    if (!seen.insert(gens_[g].name).second) throw std::invalid_argument("duplicate generator " + gens_[g].name);
    gen_degrees_.push_back(gens_[g].degree);
  }
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    for (const auto& [c, u] : diffs_[g]) {
      int deg = 0;
      for (auto x : u) {
        if (x >= gens_.size()) throw std::invalid_argument("differential refers to an unknown generator");
        deg += gen_degrees_[x];
      }
      if (sgn(c) != 0 && deg != gens_[g].degree + 1)
        throw DegreeMismatch("d(" + gens_[g].name + ") has a term of degree " + std::to_string(deg) + ", expected " +
                             std::to_string(gens_[g].degree + 1));
    }
    if (!diffs_[g].empty() && gens_[g].degree + 1 > cap_) throw DegreeCapExceeded(gens_[g].degree + 1, cap_);
  }

  words_.assign(cap_ + 1, {});
  index_.assign(cap_ + 1, {});
  Word w;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int deg) {
    words_[deg].push_back(w);
    for (std::size_t g = start; g < gens_.size(); ++g) {
      const int d = deg + gen_degrees_[g];
      if (d > cap_) continue;
      if (!w.empty() && w.back() == g && (gen_degrees_[g] & 1)) continue;
      w.push_back(static_cast<std::uint32_t>(g));
      rec(g, d);
      w.pop_back();
    }
  };
  rec(0, 0);
  labels_.assign(cap_ + 1, {});
  for (int k = 0; k <= cap_; ++k) {
    std::sort(words_[k].begin(), words_[k].end());
    for (std::size_t i = 0; i < words_[k].size(); ++i) {
      const Word& m = words_[k][i];
      index_[k].emplace(m, i);
      std::string label;
      for (std::size_t t = 0; t < m.size();) {
        std::size_t e = t;
        while (e < m.size() && m[e] == m[t]) ++e;
        if (!label.empty()) label += "*";
        label += gens_[m[t]].name;
        if (e - t > 1) label += "^" + std::to_string(e - t);
        t = e;
      }
      labels_[k].push_back(m.empty() ? "1" : label);
    }
  }

  d_.assign(cap_, {});
  for (int k = 0; k < cap_; ++k) {
    QMatrix& d = d_[k];
    d = QMatrix(dim(k + 1), dim(k));
    for (std::size_t i = 0; i < words_[k].size(); ++i) {
      const Word& m = words_[k][i];
      int prefix = 0;
      for (std::size_t t = 0; t < m.size(); ++t) {
        const int sign = (prefix & 1) ? -1 : 1;
        for (const auto& [c, u] : diffs_[m[t]]) {
          Word img(m.begin(), m.begin() + t);
          for (auto x : u) img.push_back(static_cast<std::uint32_t>(x));
          img.insert(img.end(), m.begin() + t + 1, m.end());
          const Located loc = locate(img);
          if (loc.sign != 0) d(loc.index, i) += sign * loc.sign * c;
        }
        prefix += gen_degrees_[m[t]];
      }
    }
  }

  for (std::size_t g = 0; g < gens_.size(); ++g) {
    const int k = gens_[g].degree + 1;
    if (k + 1 > cap_) continue;
    if (!differential(differential(generator(g))).is_zero())
      throw NotASquareZeroDifferential("d(d(" + gens_[g].name + ")) is not zero");
  }
}

Located SullivanAlgebra::locate(Word w) const {
  int deg = 0;
  for (auto g : w) deg += gen_degrees_[g];
  if (deg > cap_) throw DegreeCapExceeded(deg, cap_);
  const int sign = canonicalize(w, PowerKind::GradedSymmetric, gen_degrees_);
  if (sign == 0) return {};
  return {sign, index_[deg].at(w)};
}

SparseVec SullivanAlgebra::basis_product(int p, std::size_t i, int q, std::size_t j) const {
  Word w = words_[p][i];
  const Word& v = words_[q][j];
  w.insert(w.end(), v.begin(), v.end());
  const Located loc = locate(std::move(w));
  if (loc.sign == 0) return {};
  return {{loc.index, Rational(loc.sign)}};
}

std::optional<std::size_t> SullivanAlgebra::generator_index(const std::string& name) const {
  for (std::size_t g = 0; g < gens_.size(); ++g)
    if (gens_[g].name == name) return g;
  return std::nullopt;
}

Element SullivanAlgebra::generator(std::size_t g) const { return monomial({g}); }

Element SullivanAlgebra::monomial(const std::vector<std::size_t>& gens) const {
  Word w;
  int deg = 0;
  for (auto g : gens) {
    w.push_back(static_cast<std::uint32_t>(g));
    deg += gen_degrees_.at(g);
  }
  Element out = zero(deg);
  const Located loc = locate(std::move(w));
  if (loc.sign != 0) out.coeffs[loc.index] = loc.sign;
  return out;
}

Element SullivanAlgebra::polynomial(const Polynomial& p, int degree) const {
  Element out = zero(degree);
  for (const auto& [c, u] : p) {
    if (sgn(c) == 0) continue;
    add_scaled(out, c, monomial(u));
  }
  return out;
}

ExplicitAlgebra::ExplicitAlgebra(std::string name, int cap, std::vector<std::vector<std::string>> basis,
                                 const std::vector<ProductRule>& products, std::vector<QMatrix> d) {
  name_ = std::move(name);
  cap_ = cap;
  if (cap_ < 0) throw std::invalid_argument("negative degree cap");
  if (static_cast<int>(basis.size()) > cap_ + 1) throw DegreeCapExceeded(static_cast<int>(basis.size()) - 1, cap_);
  basis.resize(cap_ + 1);
  if (basis[0].size() != 1) throw StructureCheckFailed("degree 0 must be spanned by the unit alone");
  labels_ = std::move(basis);
  offset_.assign(cap_ + 2, 0);
  for (int k = 0; k <= cap_; ++k) offset_[k + 1] = offset_[k] + labels_[k].size();

  auto put = [&](std::size_t a, std::size_t b, const SparseVec& v) {
    auto [it, inserted] = table_.emplace(std::make_pair(a, b), v);
    if (inserted) return;
    QVector x, y;
    std::size_t n = 0;
    for (const auto& [i, c] : it->second) n = std::max(n, i + 1);
    for (const auto& [i, c] : v) n = std::max(n, i + 1);
    x.resize(n);
    y.resize(n);
    for (const auto& [i, c] : it->second) x[i] += c;
    for (const auto& [i, c] : v) y[i] += c;
    if (x != y) throw StructureCheckFailed("conflicting products for a basis pair");
  };
  for (int k = 0; k <= cap_; ++k)
    for (std::size_t i = 0; i < labels_[k].size(); ++i) {
      put(offset_[0], offset_[k] + i, {{i, Rational(1)}});
      put(offset_[k] + i, offset_[0], {{i, Rational(1)}});
    }
  for (const auto& r : products) {
    if (r.p < 0 || r.q < 0 || r.p > cap_ || r.q > cap_ || r.i >= labels_[r.p].size() || r.j >= labels_[r.q].size())
      throw std::invalid_argument("product rule refers to a missing basis element");
    const int k = r.p + r.q;
    SparseVec v;
    for (const auto& [idx, c] : r.value) {
      if (sgn(c) == 0) continue;
      if (k > cap_ || idx >= labels_[k].size())
        throw DegreeMismatch("product value outside degree " + std::to_string(k));
      v.emplace_back(idx, c);
    }
    SparseVec swapped = v;
    for (auto& [idx, c] : swapped) c *= koszul(r.p, r.q);
    put(offset_[r.p] + r.i, offset_[r.q] + r.j, v);
    put(offset_[r.q] + r.j, offset_[r.p] + r.i, swapped);
  }

  d.resize(cap_ + 1);
  d_.assign(cap_ + 1, {});
  for (int k = 0; k <= cap_; ++k) {
    const std::size_t rows = k + 1 > cap_ ? 0 : labels_[k + 1].size();
    const std::size_t cols = labels_[k].size();
    if (d[k].rows() == 0 && d[k].cols() == 0) {
      d_[k] = QMatrix(rows, cols);
    } else if (d[k].rows() != rows || d[k].cols() != cols) {
      throw DegreeMismatch("differential matrix in degree " + std::to_string(k) + " has the wrong shape");
    } else {
      d_[k] = std::move(d[k]);
    }
  }
  validate();
}

SparseVec ExplicitAlgebra::basis_product(int p, std::size_t i, int q, std::size_t j) const {
  if (p + q > cap_) return {};
  auto it = table_.find({offset_[p] + i, offset_[q] + j});
  return it == table_.end() ? SparseVec{} : it->second;
}

std::optional<std::pair<int, std::size_t>> ExplicitAlgebra::find_basis(const std::string& label) const {
  for (int k = 0; k <= cap_; ++k)
    for (std::size_t i = 0; i < labels_[k].size(); ++i)
      if (labels_[k][i] == label) return std::make_pair(k, i);
  return std::nullopt;
}

void ExplicitAlgebra::validate() const { check_structure(*this); }

void check_structure(const Dga& a, std::optional<int> max_degree) {
  const int top = std::min(a.cap(), max_degree.value_or(a.cap()));
  const int dtop = a.truncating() ? a.cap() - 1 : a.cap();
  for (int k = 0; k + 1 <= dtop && k + 1 <= top; ++k) {
    const QMatrix& d0 = a.d_matrix(k);
    const QMatrix& d1 = a.d_matrix(k + 1);
    if (d1.rows() && d0.cols() && !(d1 * d0).is_zero())
      throw NotASquareZeroDifferential("d∘d is not zero on degree " + std::to_string(k));
  }
  for (int p = 0; p <= top; ++p)
    for (int q = p; p + q <= top; ++q)
      for (std::size_t i = 0; i < a.dim(p); ++i)
        for (std::size_t j = 0; j < a.dim(q); ++j) {
          Element x = a.basis_element(p, i), y = a.basis_element(q, j);
          if (a.multiply(x, y) != koszul(p, q) * a.multiply(y, x))
            throw StructureCheckFailed("graded commutativity fails for " + a.labels(p)[i] + ", " + a.labels(q)[j]);
          if (!a.truncating() || p + q + 1 <= a.cap()) {
            Element lhs = a.differential(a.multiply(x, y));
            Element rhs = a.multiply(a.differential(x), y);
            add_scaled(rhs, koszul(p, 1), a.multiply(x, a.differential(y)));
            if (lhs != rhs)
              throw StructureCheckFailed("Leibniz rule fails for " + a.labels(p)[i] + ", " + a.labels(q)[j]);
          }
        }
  for (int p = 1; p <= top; ++p)
    for (int q = 1; p + q <= top; ++q)
      for (int r = 1; p + q + r <= top; ++r)
        for (std::size_t i = 0; i < a.dim(p); ++i)
          for (std::size_t j = 0; j < a.dim(q); ++j) {
            const Element xy = a.multiply(a.basis_element(p, i), a.basis_element(q, j));
            for (std::size_t k = 0; k < a.dim(r); ++k) {
              const Element z = a.basis_element(r, k);
              const Element yz = a.multiply(a.basis_element(q, j), z);
              if (a.multiply(xy, z) != a.multiply(a.basis_element(p, i), yz))
                throw StructureCheckFailed("associativity fails for " + a.labels(p)[i] + ", " + a.labels(q)[j] +
                                           ", " + a.labels(r)[k]);
            }
          }
}

}  // namespace massey
