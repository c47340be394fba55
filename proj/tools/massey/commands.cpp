#include "commands.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "massey/errors.hpp"
#include "massey/formality.hpp"
#include "massey/massey4.hpp"
#include "massey/modelfile.hpp"
#include "massey/models.hpp"

namespace massey::cli {

namespace {

void header(Report& r, const std::string& command, const Dga& a) {
  r.data["command"] = command;
  r.data["model"] = a.name();
  r.line(fmt::format("model {} (cap {})", a.name(), a.cap()));
}

QVector parse_class(const InvariantContext& ctx, const std::string& text) {
  const GradedBasis& h = ctx.products().h;
  const auto poly = parse_polynomial(text, [&](std::string_view s) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < h.size(); ++i)
      if (h.labels[i] == s) return i;
    return std::nullopt;
  });
  QVector v = zeros(h.size());
  for (const auto& [c, u] : poly) {
    if (u.size() != 1) throw std::invalid_argument("a class expression must be linear in the classes: " + text);
    v[u[0]] += c;
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

void add_choice(Report& r, const std::string& provenance) {
  r.data["choice"] = provenance;
  r.line("cochain choice: " + provenance);
}

}  // namespace

Report cohomology_command(const std::string& file, std::optional<int> through) {
  const auto a = read_model_file(file);
  InvariantContext ctx(*a, through);
  const Cohomology& h = ctx.cohomology();
  Report r;
  header(r, "cohomology", *a);
  r.data["top"] = h.top();
  Json betti = Json::object(), classes = Json::array();
  r.line(fmt::format("reduced cohomology through degree {}", h.top()));
  for (int k = 1; k <= h.top(); ++k) {
    betti[std::to_string(k)] = h.betti(k);
    if (h.betti(k) > 0) r.line(fmt::format("  b{} = {}", k, h.betti(k)));
  }
  for (std::size_t i = 0; i < h.size(); ++i) {
    const std::string rep = a->format(h.representative(i));
    classes.push_back({{"label", h.basis().labels[i]}, {"degree", h.basis().degrees[i]}, {"representative", rep}});
    r.line(fmt::format("  {} = [{}]", h.basis().labels[i], rep));
  }
  r.data["betti"] = std::move(betti);
  r.data["classes"] = std::move(classes);
  Json dims;
  dims["E"] = ctx.products().e.dim();
  dims["K"] = ctx.k().dim();
  dims["B"] = ctx.b().dim();
  dims["D"] = ctx.d().dim();
  dims["L2"] = ctx.l2_index().size();
  r.data["through"] = ctx.through();
  r.data["dims"] = dims;
  r.line(fmt::format("spaces through degree {}: dim E = {}, dim K = {}, dim B = {}, dim D = {}, dim L2 = {}",
                     ctx.through(), ctx.products().e.dim(), ctx.k().dim(), ctx.b().dim(), ctx.d().dim(),
                     ctx.l2_index().size()));
  return r;
}

Report repdim_command(int rank) {
  if (rank < 1) throw std::invalid_argument("--rank must be at least 1");
  const std::size_t r = static_cast<std::size_t>(rank);
  const std::size_t dim = compute_R(r).dim();
  const mpz_class formula = 6 * binomial(rank + 2, 5);
  const mpz_class weyl = weyl_dim({3, 1, 1}, r);
  Report rep;
  rep.data["command"] = "repdim";
  rep.data["rank"] = rank;
  rep.data["dim_R"] = dim;
  rep.data["formula"] = formula.get_str();
  rep.data["weyl_S311"] = weyl.get_str();
  rep.data["agree"] = formula == dim && weyl == dim;
  rep.line(fmt::format("dim R = {} (kernel of m for r = {})", dim, rank));
  rep.line(fmt::format("6*C({},5) = {}", rank + 2, formula.get_str()));
  rep.line(fmt::format("dim S(3,1,1) = {}", weyl.get_str()));
  if (!(formula == dim && weyl == dim)) rep.line("MISMATCH");
  return rep;
}

Report bianchi_command(const std::string& file) {
  const auto a = read_model_file(file);
  InvariantContext ctx(*a);
  const auto c = canonical_choice(ctx.cohomology(), ctx.products());
  Report r;
  header(r, "bianchi", *a);
  const auto f = bianchi_massey(ctx, c);
  add_tensor(r, "F", ctx, f);
  r.line(f.is_zero() ? "Bianchi-Massey tensor vanishes" : "Bianchi-Massey tensor nonzero: no choice with vanishing uniform triple product");
  return r;
}

Report triple_command(const std::string& file, bool vanish) {
  const auto a = read_model_file(file);
  InvariantContext ctx(*a);
  const auto c = canonical_choice(ctx.cohomology(), ctx.products());
  Report r;
  header(r, "triple", *a);
  if (!vanish) {
    add_choice(r, "canonical");
    add_tensor(r, "T", ctx, uniform_triple(ctx, c));
    return r;
  }
  const auto v = find_vanishing_triple_choice(ctx, c);
  r.data["vanishing_choice"] = v.has_value();
  if (!v) {
    r.line("no cochain choice makes the uniform triple product vanish (the Bianchi-Massey tensor is nonzero)");
    r.exit_code = Undefined;
    return r;
  }
  add_choice(r, "vanishing-triple");
  add_tensor(r, "T", ctx, uniform_triple(ctx, *v));
  return r;
}

Report pentagonal_command(const std::string& file, bool canonical, std::optional<int> through) {
  const auto a = read_model_file(file);
  InvariantContext ctx(*a, through);
  auto c = canonical_choice(ctx.cohomology(), ctx.products());
  Report r;
  header(r, "pentagonal", *a);
  std::string provenance = "canonical";
  if (!canonical) {
    if (auto v = find_vanishing_triple_choice(ctx, c)) {
      c = std::move(*v);
      provenance = "vanishing-triple";
    }
  }
  add_choice(r, provenance);
  const auto p = pentagonal(ctx, c);
  add_tensor(r, "P", ctx, p);
  if (a->orientation()) {
    try {
      const QVector bar = canonical_element(ctx, p);
      r.data["canonical_element"] = vector_json(bar);
      r.line("canonical element (orientation applied to P): " + std::string(is_zero(bar) ? "zero" : "nonzero"));
    } catch (const MissingOrientation& e) {
      r.line(std::string("no canonical element: ") + e.what());
    }
  }
  return r;
}

Report massey4_command(const std::string& file, const std::string& classes, const std::optional<std::string>& times) {
  const auto a = read_model_file(file);
  InvariantContext ctx(*a);
  const auto parts = split(classes, ',');
  if (parts.size() != 4) throw std::invalid_argument("--classes needs four comma-separated classes");
  std::array<QVector, 4> x;
  for (int i = 0; i < 4; ++i) x[i] = parse_class(ctx, parts[i]);
  auto c = canonical_choice(ctx.cohomology(), ctx.products());
  std::string provenance = "canonical";
  if (auto v = find_vanishing_triple_choice(ctx, c)) {
    c = std::move(*v);
    provenance = "vanishing-triple";
  }
  Report r;
  header(r, "massey4", *a);
  add_choice(r, provenance);
  const GradedBasis& h = ctx.products().h;
  try {
    if (times) {
      const QVector x5 = parse_class(ctx, *times);
      const auto m = massey_times_fifth(ctx, c, {x[0], x[1], x[2], x[3], x5});
      r.data["degree"] = m.product.degree;
      r.data["value"] = format_class(h, m.product.value);
      r.data["ambiguity_dim"] = m.product.ambiguity.dim();
      r.data["times"] = format_class(h, m.value);
      r.data["independent"] = m.independent;
      r.line(fmt::format("<x1,x2,x3,x4> = {} (degree {}, ambiguity of dimension {})", format_class(h, m.product.value),
                         m.product.degree, m.product.ambiguity.dim()));
      r.line(fmt::format("<x1,x2,x3,x4>*x5 = {}{}", format_class(h, m.value),
                         m.independent ? "" : " (depends on the defining system)"));
    } else {
      const auto m = fourfold_massey(ctx, c, x);
      r.data["degree"] = m.degree;
      r.data["value"] = format_class(h, m.value);
      r.data["ambiguity_dim"] = m.ambiguity.dim();
      r.line(fmt::format("<x1,x2,x3,x4> = {} (degree {}, ambiguity of dimension {})", format_class(h, m.value),
                         m.degree, m.ambiguity.dim()));
    }
  } catch (const NotDefined& e) {
    r.data["defined"] = false;
    r.data["reason"] = e.what();
    r.line(std::string("fourfold Massey product not defined: ") + e.what());
    r.exit_code = Undefined;
  }
  return r;
}

Report formality_command(const std::string& file, int conn) {
  const auto a = read_model_file(file);
  const FormalityResult f = formality_verdict(*a, conn);
  Report r;
  header(r, "formality", *a);
  r.data["verdict"] = to_string(f.verdict);
  r.data["reason"] = f.reason;
  r.line("verdict: " + to_string(f.verdict) + " (" + f.reason + ")");
  if (f.witness) {
    const auto& w = *f.witness;
    r.data["witness"] = {{"tensor", w.tensor},
                         {"column", w.column},
                         {"domain_degree", w.domain_degree},
                         {"class", w.class_label},
                         {"value", rational(w.value)}};
    r.line(fmt::format("witness: {} column {} (degree {}) has coefficient {} on {}", w.tensor, w.column,
                       w.domain_degree, w.value.get_str(), w.class_label));
  }
  if (f.verdict == Verdict::NotApplicable) r.exit_code = Undefined;
  return r;
}

Report p3_command(int rank, int h3, const std::optional<std::string>& out) {
  if (rank < 1 || h3 < 0) throw std::invalid_argument("need --rank >= 1 and --h3 >= 0");
  const auto a = p3_model_with_h3(rank, h3);
  const std::string text = serialize_model(*a);
  Report r;
  r.data["command"] = "p3";
  r.data["model"] = a->name();
  if (out) {
    write_model_file(*a, *out);
    r.data["file"] = *out;
    r.line(fmt::format("wrote {} to {}", a->name(), *out));
  } else {
    r.data["text"] = text;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) r.line(l);
  }
  return r;
}

Report discrepancy_command(const std::string& fx, const std::string& fy, const std::string& iso) {
  const auto x = read_model_file(fx);
  const auto y = read_model_file(fy);
  InvariantContext cx(*x), cy(*y);
  const GradedBasis &hx = cx.products().h, &hy = cy.products().h;
  QMatrix f(hy.size(), hx.size());
  std::ifstream in(iso);
  if (!in) throw std::runtime_error("cannot open " + iso);
  std::string raw;
  int line = 0;
  std::vector<bool> seen(hx.size(), false);
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string body = raw.substr(0, hash);
    if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto arrow = body.find("->");
    if (arrow == std::string::npos) throw SyntaxError(line, "expected <class> -> <expression>");
    std::string src = body.substr(0, arrow);
    src.erase(0, src.find_first_not_of(" \t"));
    src.erase(src.find_last_not_of(" \t\r") + 1);
    std::size_t col = hx.size();
    for (std::size_t i = 0; i < hx.size(); ++i)
      if (hx.labels[i] == src) col = i;
    if (col == hx.size()) throw SyntaxError(line, "unknown class '" + src + "' of the source");
    if (seen[col]) throw SyntaxError(line, "class " + src + " mapped twice");
    seen[col] = true;
    QVector v;
    try {
      v = parse_class(cy, body.substr(arrow + 2));
    } catch (const std::invalid_argument& e) {
      throw SyntaxError(line, e.what());
    }
    f.set_column(col, v);
  }
  for (std::size_t i = 0; i < hx.size(); ++i)
    if (!seen[i]) throw NotAnIsomorphism("the map file does not give an image for " + hx.labels[i]);

  Report r;
  r.data["command"] = "discrepancy";
  r.data["source"] = x->name();
  r.data["target"] = y->name();
  r.line(fmt::format("{} -> {}", x->name(), y->name()));
  try {
    const Discrepancy d = pentagonal_discrepancy(cx, cy, f);
    r.data["delta_dim"] = d.delta.dim();
    r.data["zero"] = d.zero;
    r.data["reduced"] = vector_json(d.reduced);
    r.line("cochain choices: canonical on the source, intertwining on the target");
    r.line(fmt::format("dim Delta = {}", d.delta.dim()));
    r.line(d.zero ? "pentagonal discrepancy vanishes modulo Delta"
                  : "pentagonal discrepancy is nonzero modulo Delta: the models are not equivalent");
  } catch (const NoIntertwiningChoices& e) {
    r.data["zero"] = nullptr;
    r.data["reason"] = e.what();
    r.line(std::string("discrepancy not defined: ") + e.what());
    r.exit_code = Undefined;
  }
  return r;
}

}  // namespace massey::cli
