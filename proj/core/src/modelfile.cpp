#include "massey/modelfile.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "massey/errors.hpp"

namespace massey {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class ExprParser {
 public:
  ExprParser(std::string_view text, const Resolver& resolve) : s_(text), resolve_(resolve) {}

  Polynomial run() {
    Polynomial out;
    skip();
    if (pos_ == s_.size()) throw std::invalid_argument("empty expression");
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      Rational sign(1);
      if (peek() == '+' || peek() == '-') {
        if (get() == '-') sign = -1;
      } else if (!first) {
        throw std::invalid_argument(std::string("expected + or - before '") + peek() + "'");
      }
      auto term = parse_term();
      term.first *= sign;
      if (sgn(term.first) != 0) out.push_back(std::move(term));
      first = false;
    }
    return out;
  }

 private:
  std::pair<Rational, std::vector<std::size_t>> parse_term() {
    Rational c(1);
    std::vector<std::size_t> gens;
    while (true) {
      skip();
      if (pos_ == s_.size()) throw std::invalid_argument("expression ends inside a term");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        c *= parse_literal();
      } else if (ident_start(peek())) {
        const std::size_t begin = pos_;
        while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
        const std::string_view name = s_.substr(begin, pos_ - begin);
        const auto idx = resolve_(name);
        if (!idx) throw std::invalid_argument("unknown name '" + std::string(name) + "'");
        long power = 1;
        skip();
        if (pos_ < s_.size() && peek() == '^') {
          ++pos_;
          skip();
          const Rational e = parse_literal();
          if (e.get_den() != 1 || sgn(e) <= 0) throw std::invalid_argument("exponent must be a positive integer");
          power = e.get_num().get_si();
        }
        for (long k = 0; k < power; ++k) gens.push_back(*idx);
      } else {
        throw std::invalid_argument(std::string("unexpected '") + peek() + "'");
      }
      skip();
      if (pos_ < s_.size() && peek() == '*') {
        ++pos_;
        continue;
      }
      return {c, gens};
    }
  }

  Rational parse_literal() {
    const std::size_t begin = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
    return parse_rational(std::string(s_.substr(begin, pos_ - begin)));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return s_[pos_]; }
  char get() { return s_[pos_++]; }

  std::string_view s_;
  const Resolver& resolve_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !ident_start(s[0])) return false;
  for (char c : s)
    if (!ident_char(c)) return false;
  return true;
}

int parse_int(const std::string& s, int line, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw SyntaxError(line, what + " must be an integer, got '" + s + "'");
  return v;
}

struct Pending {
  int line;
  std::string text;
};

struct FileModel {
  std::string name = "model";
  std::optional<int> cap;
  int cap_line = 0;
  std::vector<Generator> gens;
  std::map<std::string, std::size_t> gen_index;
  std::map<std::size_t, Pending> diffs;
  std::vector<std::vector<std::string>> basis{{"1"}};
  std::map<std::string, std::pair<int, std::size_t>> labels;
  struct Prod {
    int line;
    std::string a, b, value;
  };
  std::vector<Prod> products;
  std::map<int, std::pair<int, std::vector<std::vector<std::string>>>> dmatrices;
  std::optional<std::pair<int, Pending>> orient;
};

std::string strip_comment(const std::string& line) {
  const auto h = line.find('#');
  return h == std::string::npos ? line : line.substr(0, h);
}

FileModel read_directives(std::string_view text) {
  FileModel m;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  std::optional<std::pair<int, int>> open_matrix;  // (k, first line)
  while (std::getline(in, raw)) {
    ++line;
    const std::string first = trim(raw);
    if (first.empty() || first[0] == '#') continue;
    if (first.rfind("name", 0) == 0 && (first.size() == 4 || std::isspace(static_cast<unsigned char>(first[4])))) {
      if (open_matrix) throw SyntaxError(line, "directive inside a dmatrix block");
      m.name = trim(first.substr(4));
      if (m.name.empty()) throw SyntaxError(line, "name needs a value");
      continue;
    }
    const std::string body = trim(strip_comment(first));
    if (body.empty()) continue;
    const auto w = words(body);
    if (open_matrix) {
      if (w[0] == "end") {
        if (w.size() != 1) throw SyntaxError(line, "unexpected text after end");
        open_matrix.reset();
      } else {
        m.dmatrices[open_matrix->first].second.push_back(w);
      }
      continue;
    }
    const std::string& dir = w[0];
    if (dir == "cap") {
      if (w.size() != 2) throw SyntaxError(line, "usage: cap <int>");
      m.cap = parse_int(w[1], line, "cap");
      m.cap_line = line;
      if (*m.cap < 0) throw SyntaxError(line, "cap must be non-negative");
    } else if (dir == "gen") {
      if (w.size() != 3) throw SyntaxError(line, "usage: gen <name> <degree>");
      if (!is_identifier(w[1])) throw SyntaxError(line, "bad generator name '" + w[1] + "'");
      if (m.gen_index.count(w[1])) throw SyntaxError(line, "generator " + w[1] + " declared twice");
      const int d = parse_int(w[2], line, "degree");
      if (d < 1) throw DegreeMismatch("line " + std::to_string(line) + ": generator degrees must be positive");
      m.gen_index[w[1]] = m.gens.size();
      m.gens.push_back({w[1], d});
    } else if (dir == "diff") {
      const auto eq = body.find('=');
      if (w.size() < 2 || eq == std::string::npos) throw SyntaxError(line, "usage: diff <name> = <polynomial>");
      const std::string g = trim(body.substr(4, eq - 4));
      auto it = m.gen_index.find(g);
      if (it == m.gen_index.end()) throw SyntaxError(line, "diff of undeclared generator '" + g + "'");
      if (m.diffs.count(it->second)) throw SyntaxError(line, "second diff for " + g);
      m.diffs[it->second] = {line, trim(body.substr(eq + 1))};
    } else if (dir == "basis") {
      if (w.size() < 3) throw SyntaxError(line, "usage: basis <degree> <label>...");
      const int d = parse_int(w[1], line, "degree");
      if (d < 1) throw SyntaxError(line, "basis degrees must be positive (the unit is implicit)");
      if (static_cast<int>(m.basis.size()) <= d) m.basis.resize(d + 1);
      for (std::size_t t = 2; t < w.size(); ++t) {
        if (!is_identifier(w[t])) throw SyntaxError(line, "bad basis label '" + w[t] + "'");
        if (m.labels.count(w[t])) throw SyntaxError(line, "basis label " + w[t] + " declared twice");
        m.labels[w[t]] = {d, m.basis[d].size()};
        m.basis[d].push_back(w[t]);
      }
    } else if (dir == "product") {
      const auto eq = body.find('=');
      const auto star = body.find('*');
      if (eq == std::string::npos || star == std::string::npos || star > eq)
        throw SyntaxError(line, "usage: product <label> * <label> = <expression>");
      m.products.push_back({line, trim(body.substr(7, star - 7)), trim(body.substr(star + 1, eq - star - 1)),
                            trim(body.substr(eq + 1))});
    } else if (dir == "dmatrix") {
      if (w.size() != 2) throw SyntaxError(line, "usage: dmatrix <degree>");
      const int k = parse_int(w[1], line, "degree");
      if (m.dmatrices.count(k)) throw SyntaxError(line, "second dmatrix for degree " + w[1]);
      m.dmatrices[k] = {line, {}};
      open_matrix = std::make_pair(k, line);
    } else if (dir == "orient") {
      if (w.size() < 2) throw SyntaxError(line, "usage: orient <degree> [<expression>]");
      const int d = parse_int(w[1], line, "degree");
      const auto at = body.find(w[1], 6) + w[1].size();
      m.orient = std::make_pair(d, Pending{line, trim(body.substr(at))});
    } else if (dir == "end") {
      throw SyntaxError(line, "end without dmatrix");
    } else {
      throw SyntaxError(line, "unknown directive '" + dir + "'");
    }
  }
  if (open_matrix) throw SyntaxError(open_matrix->second, "dmatrix block is not closed");
  if (!m.gens.empty() && m.basis.size() > 1) throw SyntaxError(line, "a model has either gen or basis lines, not both");
  if (!m.gens.empty() && (!m.products.empty() || !m.dmatrices.empty()))
    throw SyntaxError(line, "product and dmatrix need an explicit basis");
  return m;
}

Polynomial parse_at(int line, std::string_view text, const Resolver& resolve) {
  try {
    return parse_polynomial(text, resolve);
  } catch (const std::invalid_argument& e) {
    throw SyntaxError(line, e.what());
  }
}

void set_orientation(Dga& a, const FileModel& m) {
  if (!m.orient) return;
  const auto& [d, p] = *m.orient;
  if (d < 1 || d > a.cap()) throw SyntaxError(p.line, "orientation degree outside 1.." + std::to_string(a.cap()));
  Orientation o{d, std::nullopt};
  if (!p.text.empty()) {
    try {
      o.fundamental = parse_element(a, d, p.text).coeffs;
    } catch (const std::invalid_argument& e) {
      throw SyntaxError(p.line, e.what());
    } catch (const DegreeMismatch& e) {
      throw DegreeMismatch("line " + std::to_string(p.line) + ": " + e.what());
    }
    if (!a.differential(Element{d, *o.fundamental}).is_zero() && !(a.truncating() && d + 1 > a.cap()))
      throw SyntaxError(p.line, "the fundamental cochain is not closed");
  }
  a.set_orientation(std::move(o));
}

std::unique_ptr<Dga> build_sullivan(const FileModel& m) {
  const int cap = m.cap.value_or(10);
  auto resolve = [&](std::string_view s) -> std::optional<std::size_t> {
    auto it = m.gen_index.find(std::string(s));
    if (it == m.gen_index.end()) return std::nullopt;
    return it->second;
  };
  std::vector<Polynomial> diffs(m.gens.size());
  for (const auto& [g, p] : m.diffs) {
    diffs[g] = parse_at(p.line, p.text, resolve);
    for (const auto& [c, u] : diffs[g]) {
      int deg = 0;
      for (auto x : u) deg += m.gens[x].degree;
      if (sgn(c) != 0 && deg != m.gens[g].degree + 1)
        throw DegreeMismatch("line " + std::to_string(p.line) + ": d(" + m.gens[g].name + ") has a term of degree " +
                             std::to_string(deg) + ", expected " + std::to_string(m.gens[g].degree + 1));
    }
    if (m.gens[g].degree + 1 > cap && !diffs[g].empty())
      throw SyntaxError(p.line, "d(" + m.gens[g].name + ") lies above the cap");
  }
  auto a = std::make_unique<SullivanAlgebra>(m.name, m.gens, std::move(diffs), cap);
  set_orientation(*a, m);
  return a;
}

std::unique_ptr<Dga> build_explicit(const FileModel& m) {
  const int top = static_cast<int>(m.basis.size()) - 1;
  const int cap = m.cap.value_or(top);
  if (cap < top) throw SyntaxError(m.cap_line, "cap is below the top basis degree " + std::to_string(top));
  std::vector<ExplicitAlgebra::ProductRule> rules;
  for (const auto& pr : m.products) {
    auto a = m.labels.find(pr.a), b = m.labels.find(pr.b);
    if (a == m.labels.end()) throw SyntaxError(pr.line, "unknown basis label '" + pr.a + "'");
    if (b == m.labels.end()) throw SyntaxError(pr.line, "unknown basis label '" + pr.b + "'");
    const int k = a->second.first + b->second.first;
    ExplicitAlgebra::ProductRule r{a->second.first, a->second.second, b->second.first, b->second.second, {}};
    if (pr.value != "0") {
      const auto poly = parse_at(pr.line, pr.value, [&](std::string_view s) -> std::optional<std::size_t> {
        auto it = m.labels.find(std::string(s));
        if (it == m.labels.end()) return std::nullopt;
        if (it->second.first != k)
          throw DegreeMismatch("line " + std::to_string(pr.line) + ": " + std::string(s) + " does not have degree " +
                               std::to_string(k));
        return it->second.second;
      });
      for (const auto& [c, u] : poly) {
        if (u.size() != 1) throw SyntaxError(pr.line, "product values must be linear in the basis");
        r.value.emplace_back(u[0], c);
      }
    }
    rules.push_back(std::move(r));
  }
  std::vector<std::vector<std::string>> basis = m.basis;
  basis.resize(cap + 1);
  std::vector<QMatrix> d(cap + 1);
  for (const auto& [k, block] : m.dmatrices) {
    const auto& [line, rows] = block;
    if (k < 0 || k >= cap) throw SyntaxError(line, "dmatrix degree outside 0.." + std::to_string(cap - 1));
    const std::size_t nr = basis[k + 1].size(), nc = basis[k].size();
    if (rows.size() != nr)
      throw DegreeMismatch("line " + std::to_string(line) + ": dmatrix " + std::to_string(k) + " needs " +
                           std::to_string(nr) + " rows, got " + std::to_string(rows.size()));
    QMatrix q(nr, nc);
    for (std::size_t r = 0; r < nr; ++r) {
      if (rows[r].size() != nc)
        throw DegreeMismatch("line " + std::to_string(line + 1 + static_cast<int>(r)) + ": expected " +
                             std::to_string(nc) + " entries");
      for (std::size_t c = 0; c < nc; ++c) {
        try {
          q(r, c) = parse_rational(rows[r][c]);
        } catch (const std::invalid_argument& e) {
          throw SyntaxError(line + 1 + static_cast<int>(r), e.what());
        }
      }
    }
    d[k] = std::move(q);
  }
  auto a = std::make_unique<ExplicitAlgebra>(m.name, cap, std::move(basis), rules, std::move(d));
  set_orientation(*a, m);
  return a;
}

void write_term(std::ostringstream& out, const Rational& c, const std::string& word, bool first) {
  if (first) {
    if (sgn(c) < 0) out << "-";
  } else {
    out << (sgn(c) < 0 ? " - " : " + ");
  }
  const Rational mag = abs(c);
  if (word.empty()) {
    out << mag.get_str();
    return;
  }
  if (mag != 1) out << mag.get_str() << "*";
  out << word;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Resolver& resolve) {
  return ExprParser(text, resolve).run();
}

std::unique_ptr<Dga> parse_model(std::string_view text) {
  const FileModel m = read_directives(text);
  if (!m.gens.empty()) return build_sullivan(m);
  return build_explicit(m);
}

std::unique_ptr<Dga> read_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

std::string serialize_model(const Dga& a) {
  std::ostringstream out;
  out << "name " << a.name() << "\n";
  out << "cap " << a.cap() << "\n";
  if (const auto* s = dynamic_cast<const SullivanAlgebra*>(&a)) {
    const auto& gens = s->generators();
    for (const auto& g : gens) out << "gen " << g.name << " " << g.degree << "\n";
    for (std::size_t g = 0; g < gens.size(); ++g) {
      bool first = true;
      std::ostringstream poly;
      for (const auto& [c, u] : s->generator_differential(g)) {
        if (sgn(c) == 0) continue;
        std::string word;
        for (auto x : u) word += (word.empty() ? "" : "*") + gens[x].name;
        write_term(poly, c, word, first);
        first = false;
      }
      if (!first) out << "diff " << gens[g].name << " = " << poly.str() << "\n";
    }
  } else {
    for (int k = 1; k <= a.cap(); ++k) {
      if (a.dim(k) == 0) continue;
      out << "basis " << k;
      for (const auto& l : a.labels(k)) out << " " << l;
      out << "\n";
    }
    for (int p = 1; p <= a.cap(); ++p)
      for (int q = p; p + q <= a.cap(); ++q)
        for (std::size_t i = 0; i < a.dim(p); ++i)
          for (std::size_t j = (p == q ? i : 0); j < a.dim(q); ++j) {
            const Element v = a.multiply(a.basis_element(p, i), a.basis_element(q, j));
            if (v.is_zero()) continue;
            out << "product " << a.labels(p)[i] << " * " << a.labels(q)[j] << " = " << a.format(v) << "\n";
          }
    for (int k = 0; k < a.cap(); ++k) {
      const QMatrix& d = a.d_matrix(k);
      if (d.is_zero()) continue;
      out << "dmatrix " << k << "\n";
      for (std::size_t r = 0; r < d.rows(); ++r) {
        for (std::size_t c = 0; c < d.cols(); ++c) out << (c ? " " : "") << d(r, c).get_str();
        out << "\n";
      }
      out << "end\n";
    }
  }
  if (const auto& o = a.orientation()) {
    out << "orient " << o->degree;
    if (o->fundamental) out << " " << a.format(Element{o->degree, *o->fundamental});
    out << "\n";
  }
  return out.str();
}

void write_model_file(const Dga& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize_model(a);
}

Element parse_element(const Dga& a, int degree, std::string_view text) {
  if (degree < 0 || degree > a.cap()) throw DegreeCapExceeded(degree, a.cap());
  if (const auto* s = dynamic_cast<const SullivanAlgebra*>(&a)) {
    const auto poly = parse_polynomial(text, [&](std::string_view n) { return s->generator_index(std::string(n)); });
    for (const auto& [c, u] : poly) {
      int deg = 0;
      for (auto g : u) deg += s->generators()[g].degree;
      if (sgn(c) != 0 && deg != degree)
        throw DegreeMismatch("a term of degree " + std::to_string(deg) + " in an element of degree " +
                             std::to_string(degree));
    }
    return s->polynomial(poly, degree);
  }
  const auto& names = a.labels(degree);
  Element out = a.zero(degree);
  const auto poly = parse_polynomial(text, [&](std::string_view n) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return i;
    for (int k = 0; k <= a.cap(); ++k)
      for (const auto& l : a.labels(k))
        if (l == n) throw DegreeMismatch(std::string(n) + " does not have degree " + std::to_string(degree));
    return std::nullopt;
  });
  for (const auto& [c, u] : poly) {
    if (u.empty()) {
      if (degree != 0) throw DegreeMismatch("a constant in an element of degree " + std::to_string(degree));
      out.coeffs[0] += c;
      continue;
    }
    if (u.size() != 1) throw std::invalid_argument("products of basis labels are not allowed here");
    out.coeffs[u[0]] += c;
  }
  return out;
}

bool same_model(const Dga& a, const Dga& b) {
  if (a.truncating() != b.truncating() || a.name() != b.name() || a.cap() != b.cap()) return false;
  for (int k = 0; k <= a.cap(); ++k)
    if (a.labels(k) != b.labels(k)) return false;
  for (int k = 0; k < a.cap(); ++k)
    if (!(a.d_matrix(k) == b.d_matrix(k))) return false;
  // Sullivan products are fixed by the labels.
  for (int p = 1; !a.truncating() && p <= a.cap(); ++p)
    for (int q = p; p + q <= a.cap(); ++q)
      for (std::size_t i = 0; i < a.dim(p); ++i)
        for (std::size_t j = 0; j < a.dim(q); ++j)
          if (a.multiply(a.basis_element(p, i), a.basis_element(q, j)) !=
              b.multiply(b.basis_element(p, i), b.basis_element(q, j)))
            return false;
  const auto &oa = a.orientation(), &ob = b.orientation();
  if (oa.has_value() != ob.has_value()) return false;
  return !oa || (oa->degree == ob->degree && oa->fundamental == ob->fundamental);
}

}  // namespace massey
