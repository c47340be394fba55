#include "massey/multilinear.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace massey {

std::vector<std::size_t> GradedBasis::of_degree(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (degrees[i] == d) out.push_back(i);
  return out;
}

int GradedBasis::max_degree() const {
  return degrees.empty() ? -1 : *std::max_element(degrees.begin(), degrees.end());
}

GradedBasis GradedBasis::uniform(std::size_t r, int degree, const std::string& prefix) {
  GradedBasis b;
  for (std::size_t i = 0; i < r; ++i) {
    b.degrees.push_back(degree);
    b.labels.push_back(prefix + std::to_string(i + 1));
  }
  return b;
}

GradedBasis subspace_graded(const SubspaceBasis& s, const GradedBasis& ambient, const std::string& prefix) {
  GradedBasis g;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const int d = ambient.degrees[s.pivots()[i]];
    const QVector& v = s[i];
    for (std::size_t j = 0; j < v.size(); ++j)
      if (sgn(v[j]) != 0 && ambient.degrees[j] != d)
        throw std::logic_error("subspace_graded: inhomogeneous basis vector");
    g.degrees.push_back(d);
    g.labels.push_back(prefix + std::to_string(i));
  }
  return g;
}

namespace {

bool odd(int d) { return (d & 1) != 0; }

// Sign of swapping adjacent letters of degrees da, db.
int swap_sign(PowerKind kind, int da, int db) {
  switch (kind) {
    case PowerKind::Tensor:
    case PowerKind::Symmetric:
      return 1;
    case PowerKind::Exterior:
      return -1;
    case PowerKind::GradedSymmetric:
      return odd(da) && odd(db) ? -1 : 1;
    case PowerKind::GradedAntisymmetric:
      return odd(da) && odd(db) ? 1 : -1;
  }
  return 1;
}

// Whether a letter of degree d may occur twice.
bool may_repeat(PowerKind kind, int d) {
  switch (kind) {
    case PowerKind::Tensor:
    case PowerKind::Symmetric:
      return true;
    case PowerKind::Exterior:
      return false;
    case PowerKind::GradedSymmetric:
      return !odd(d);
    case PowerKind::GradedAntisymmetric:
      return odd(d);
  }
  return true;
}

}  // namespace

int canonicalize(Word& w, PowerKind kind, const std::vector<int>& degrees) {
  if (kind == PowerKind::Tensor) return 1;
  int sign = 1;
  for (std::size_t i = 1; i < w.size(); ++i)
    for (std::size_t j = i; j > 0 && w[j - 1] > w[j]; --j) {
      sign *= swap_sign(kind, degrees[w[j - 1]], degrees[w[j]]);
      std::swap(w[j - 1], w[j]);
    }
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1] && !may_repeat(kind, degrees[w[i]])) return 0;
  return sign;
}

PowerBasis::PowerBasis(GradedBasis base, PowerKind kind, int power, std::optional<int> max_degree)
    : base_(std::move(base)), kind_(kind), power_(power) {
  if (power < 0) throw std::invalid_argument("PowerBasis: negative power");
  const std::size_t n = base_.size();
  Word w;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int deg) {
    if (static_cast<int>(w.size()) == power_) {
      words_.push_back(w);
      degrees_.push_back(deg);
      return;
    }
    for (std::size_t i = (kind_ == PowerKind::Tensor ? 0 : start); i < n; ++i) {
      const int d = deg + base_.degrees[i];
      if (max_degree && d > *max_degree) continue;
      if (!w.empty() && w.back() == i && !may_repeat(kind_, base_.degrees[i])) continue;
      w.push_back(static_cast<std::uint32_t>(i));
      rec(i, d);
      w.pop_back();
    }
  };
  rec(0, 0);
  for (std::size_t i = 0; i < words_.size(); ++i) index_.emplace(words_[i], i);
}

Located PowerBasis::locate(Word w) const {
  const int sign = canonicalize(w, kind_, base_.degrees);
  if (sign == 0) return {};
  auto it = index_.find(w);
  if (it == index_.end()) return {};
  return {sign, it->second};
}

GradedBasis PowerBasis::as_graded() const {
  const char* sep = "|";
  switch (kind_) {
    case PowerKind::Symmetric:
    case PowerKind::GradedSymmetric:
      sep = "*";
      break;
    case PowerKind::Exterior:
    case PowerKind::GradedAntisymmetric:
      sep = "^";
      break;
    default:
      break;
  }
  GradedBasis g;
  g.degrees = degrees_;
  for (const auto& w : words_) {
    std::string label;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) label += sep;
      const std::string& part = base_.labels[w[i]];
      const bool compound = part.find_first_of("*^|") != std::string::npos;
      label += compound ? "(" + part + ")" : part;
    }
    g.labels.push_back(power_ == 0 ? "1" : label);
  }
  return g;
}

PairBasis::PairBasis(GradedBasis a, GradedBasis b, std::optional<int> max_degree)
    : a_(std::move(a)), b_(std::move(b)), index_(a_.size() * b_.size(), -1) {
  for (std::size_t i = 0; i < a_.size(); ++i)
    for (std::size_t j = 0; j < b_.size(); ++j) {
      if (max_degree && a_.degrees[i] + b_.degrees[j] > *max_degree) continue;
      index_[i * b_.size() + j] = static_cast<std::int64_t>(pairs_.size());
      pairs_.emplace_back(i, j);
    }
}

std::optional<std::size_t> PairBasis::locate(std::size_t a, std::size_t b) const {
  const auto k = index_[a * b_.size() + b];
  if (k < 0) return std::nullopt;
  return static_cast<std::size_t>(k);
}

GradedBasis PairBasis::as_graded() const {
  GradedBasis g;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    g.degrees.push_back(degree(i));
    g.labels.push_back(a_.labels[pairs_[i].first] + "|" + b_.labels[pairs_[i].second]);
  }
  return g;
}

QMatrix induced_power_map(const PowerBasis& src, const PowerBasis& dst, const QMatrix& f) {
  if (f.cols() != src.base().size() || f.rows() != dst.base().size())
    throw std::invalid_argument("induced_power_map: shape mismatch");
  // Nonzero entries of each column of f.
  std::vector<std::vector<std::pair<std::uint32_t, Rational>>> cols(f.cols());
  for (std::size_t c = 0; c < f.cols(); ++c)
    for (std::size_t r = 0; r < f.rows(); ++r)
      if (sgn(f(r, c)) != 0) cols[c].emplace_back(static_cast<std::uint32_t>(r), f(r, c));

  QMatrix out(dst.size(), src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    const Word& w = src.word(i);
    Word img(w.size());
    std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t pos, const Rational& coeff) {
      if (pos == w.size()) {
        const Located loc = dst.locate(img);
        if (loc.sign != 0) out(loc.index, i) += loc.sign * coeff;
        return;
      }
      for (const auto& [r, v] : cols[w[pos]]) {
        img[pos] = r;
        rec(pos + 1, coeff * v);
      }
    };
    rec(0, Rational(1));
  }
  return out;
}

QMatrix induced_pair_map(const PairBasis& src, const PairBasis& dst, const QMatrix& f, const QMatrix& g) {
  if (f.cols() != src.first().size() || g.cols() != src.second().size() ||
      f.rows() != dst.first().size() || g.rows() != dst.second().size())
    throw std::invalid_argument("induced_pair_map: shape mismatch");
  QMatrix out(dst.size(), src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    const auto [a, b] = src.pair(i);
    for (std::size_t ra = 0; ra < f.rows(); ++ra) {
      if (sgn(f(ra, a)) == 0) continue;
      for (std::size_t rb = 0; rb < g.rows(); ++rb) {
        if (sgn(g(rb, b)) == 0) continue;
        if (auto k = dst.locate(ra, rb)) out(*k, i) += f(ra, a) * g(rb, b);
      }
    }
  }
  return out;
}

namespace {

// (q, x1, x2) in 𝒢³H for q ∈ H and w = x1x2 ∈ 𝒢²H.
Located triple(const PowerBasis& s3, const PowerBasis& w, std::size_t q, std::size_t wi) {
  const Word& xs = w.word(wi);
  return s3.locate({static_cast<std::uint32_t>(q), xs[0], xs[1]});
}

int koszul(int a, int b) { return (odd(a) && odd(b)) ? -1 : 1; }

}  // namespace

MMap graded_m_map(const GradedBasis& h, std::optional<int> max_degree) {
  MMap m;
  m.max_degree = max_degree;
  m.w = PowerBasis(h, PowerKind::GradedSymmetric, 2, max_degree);
  m.lambda_w = PowerBasis(m.w.as_graded(), PowerKind::GradedAntisymmetric, 2, max_degree);
  m.s3 = PowerBasis(h, PowerKind::GradedSymmetric, 3, max_degree);
  m.domain = PairBasis(h, m.lambda_w.as_graded(), max_degree);
  m.codomain = PairBasis(m.s3.as_graded(), m.w.as_graded(), max_degree);
  m.matrix = QMatrix(m.codomain.size(), m.domain.size());
  for (std::size_t i = 0; i < m.domain.size(); ++i) {
    const auto [q, l] = m.domain.pair(i);
    const Word& ab = m.lambda_w.word(l);
    const int da = m.w.degree(ab[0]), db = m.w.degree(ab[1]);
    auto add = [&](std::size_t first, std::size_t second, int sign) {
      const Located t = triple(m.s3, m.w, q, first);
      if (t.sign == 0) return;
      if (auto k = m.codomain.locate(t.index, second)) m.matrix(*k, i) += sign * t.sign;
    };
    add(ab[0], ab[1], 1);
    add(ab[1], ab[0], -koszul(da, db));
  }
  return m;
}

MMap m_map_degree2(std::size_t r) { return graded_m_map(GradedBasis::uniform(r, 2)); }

SubspaceBasis compute_R(std::size_t r) { return kernel_basis(m_map_degree2(r).matrix); }

QVector star(const MMap& m, const std::vector<QVector>& x) {
  if (x.size() != 5) throw std::invalid_argument("star: needs five vectors");
  const std::size_t r = m.domain.first().size();
  for (const auto& v : x)
    if (v.size() != r) throw std::invalid_argument("star: vector of wrong rank");
  QVector out(m.domain.size());
  std::vector<std::vector<std::uint32_t>> support(5);
  for (std::size_t k = 0; k < 5; ++k)
    for (std::size_t i = 0; i < r; ++i)
      if (sgn(x[k][i]) != 0) support[k].push_back(static_cast<std::uint32_t>(i));
  for (std::size_t shift = 0; shift < 5; ++shift) {
    const auto& y1 = x[shift];
    const auto& y2 = x[(shift + 1) % 5];
    const auto& y3 = x[(shift + 2) % 5];
    const auto& y4 = x[(shift + 3) % 5];
    const auto& y5 = x[(shift + 4) % 5];
    const auto& s1 = support[shift];
    const auto& s2 = support[(shift + 1) % 5];
    const auto& s3 = support[(shift + 2) % 5];
    const auto& s4 = support[(shift + 3) % 5];
    const auto& s5 = support[(shift + 4) % 5];
    for (auto i2 : s2)
      for (auto i3 : s3) {
        const Located a = m.w.locate({i2, i3});
        if (a.sign == 0) continue;
        const Rational c23 = y2[i2] * y3[i3] * a.sign;
        for (auto i4 : s4)
          for (auto i5 : s5) {
            const Located b = m.w.locate({i4, i5});
            if (b.sign == 0) continue;
            const Located l = m.lambda_w.locate({static_cast<std::uint32_t>(a.index),
                                                  static_cast<std::uint32_t>(b.index)});
            if (l.sign == 0) continue;
            const Rational c = c23 * y4[i4] * y5[i5] * (b.sign * l.sign);
            for (auto i1 : s1)
              if (auto k = m.domain.locate(i1, l.index)) out[*k] += c * y1[i1];
          }
      }
  }
  return out;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

mpz_class weyl_dim(const std::vector<int>& partition, std::size_t r) {
  for (std::size_t i = 0; i < partition.size(); ++i)
    if (partition[i] <= 0 || (i && partition[i] > partition[i - 1]))
      throw std::invalid_argument("weyl_dim: not a partition");
  Rational prod = 1;
  for (std::size_t i = 0; i < partition.size(); ++i)
    for (int j = 0; j < partition[i]; ++j) {
      int below = 0;
      for (std::size_t k = i + 1; k < partition.size() && partition[k] > j; ++k) ++below;
      const long hook = partition[i] - j + below;
      prod *= Rational(static_cast<long>(r) + j - static_cast<long>(i), hook);
    }
  prod.canonicalize();
  if (prod.get_den() != 1) throw std::logic_error("weyl_dim: non-integral result");
  return prod.get_num();
}

Symmetrization full_symmetrization(const GradedBasis& h, const PowerBasis& w, const SubspaceBasis& e,
                                   std::optional<int> max_degree) {
  Symmetrization s;
  s.e = subspace_graded(e, w.as_graded(), "e");
  s.domain = PairBasis(h, s.e, max_degree);
  s.s3 = PowerBasis(h, PowerKind::GradedSymmetric, 3, max_degree);
  s.matrix = QMatrix(s.s3.size(), s.domain.size());
  for (std::size_t i = 0; i < s.domain.size(); ++i) {
    const auto [q, ei] = s.domain.pair(i);
    const QVector& v = e[ei];
    for (std::size_t t = 0; t < v.size(); ++t) {
      if (sgn(v[t]) == 0) continue;
      const Located loc = triple(s.s3, w, q, t);
      if (loc.sign != 0) s.matrix(loc.index, i) += loc.sign * v[t];
    }
  }
  return s;
}

SubspaceBasis K_kernel(const Symmetrization& s) { return kernel_basis(s.matrix); }

JInclusion j_inclusion(const PowerBasis& w, const PowerBasis& lambda_w) {
  JInclusion j;
  const GradedBasis wg = w.as_graded();
  j.codomain = PairBasis(wg, wg, lambda_w.size() ? std::optional<int>(lambda_w.as_graded().max_degree())
                                                 : std::nullopt);
  j.matrix = QMatrix(j.codomain.size(), lambda_w.size());
  for (std::size_t i = 0; i < lambda_w.size(); ++i) {
    const Word& ab = lambda_w.word(i);
    j.matrix(*j.codomain.locate(ab[0], ab[1]), i) += 1;
    j.matrix(*j.codomain.locate(ab[1], ab[0]), i) -= koszul(w.degree(ab[0]), w.degree(ab[1]));
  }
  return j;
}

IdJ id_j(const MMap& m) {
  IdJ out;
  out.inner = PairBasis(m.domain.first(), m.w.as_graded(), m.max_degree);
  out.codomain = PairBasis(out.inner.as_graded(), m.w.as_graded(), m.max_degree);
  out.matrix = QMatrix(out.codomain.size(), m.domain.size());
  for (std::size_t i = 0; i < m.domain.size(); ++i) {
    const auto [q, l] = m.domain.pair(i);
    const Word& ab = m.lambda_w.word(l);
    auto add = [&](std::size_t first, std::size_t second, int sign) {
      auto k = out.inner.locate(q, first);
      if (!k) return;
      if (auto t = out.codomain.locate(*k, second)) out.matrix(*t, i) += sign;
    };
    add(ab[0], ab[1], 1);
    add(ab[1], ab[0], -koszul(m.w.degree(ab[0]), m.w.degree(ab[1])));
  }
  return out;
}

QMatrix s_id(const MMap& m, const IdJ& idj) {
  QMatrix out(m.codomain.size(), idj.codomain.size());
  for (std::size_t i = 0; i < idj.codomain.size(); ++i) {
    const auto [inner, b] = idj.codomain.pair(i);
    const auto [q, a] = idj.inner.pair(inner);
    const Located t = triple(m.s3, m.w, q, a);
    if (t.sign == 0) continue;
    if (auto k = m.codomain.locate(t.index, b)) out(*k, i) += t.sign;
  }
  return out;
}

}  // namespace massey
