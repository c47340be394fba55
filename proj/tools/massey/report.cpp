#include "report.hpp"

#include <fmt/format.h>

namespace massey::cli {

std::string Report::render(bool machine) const {
  if (machine) return data.dump(2) + "\n";
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

Json rational(const Rational& q) { return q.get_str(); }

Json vector_json(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational(x));
  return out;
}

std::string format_class(const GradedBasis& h, std::span<const Rational> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    const Rational mag = abs(v[i]);
    if (out.empty())
      out += sgn(v[i]) < 0 ? "-" : "";
    else
      out += sgn(v[i]) < 0 ? " - " : " + ";
    if (mag != 1) out += mag.get_str() + "*";
    out += h.labels[i];
  }
  return out.empty() ? "0" : out;
}

void add_tensor(Report& r, const std::string& key, const InvariantContext& ctx, const ObstructionTensor& t) {
  const GradedBasis& h = ctx.products().h;
  const std::size_t rk = rank(t.matrix);
  Json j;
  j["name"] = t.name;
  j["degree"] = t.shift;
  j["domain_dim"] = t.matrix.cols();
  j["domain_degrees"] = t.degrees;
  j["rank"] = rk;
  j["zero"] = t.is_zero();
  Json rows = Json::array();
  r.line(fmt::format("{}: degree {} map on a {}-dimensional domain, rank {}", t.name, t.shift, t.matrix.cols(), rk));
  if (t.matrix.cols() > 0) {
    std::string degs;
    for (int d : t.degrees) degs += (degs.empty() ? "" : " ") + std::to_string(d);
    r.line("  domain degrees: " + degs);
  }
  for (std::size_t i = 0; i < t.matrix.rows(); ++i) {
    const auto row = t.matrix.row(i);
    if (is_zero(row)) continue;
    Json e;
    e["class"] = h.labels[i];
    e["values"] = vector_json(row);
    rows.push_back(std::move(e));
    std::string text;
    for (const auto& x : row) text += fmt::format(" {:>6}", x.get_str());
    r.line(fmt::format("  {:<8}|{}", h.labels[i], text));
  }
  if (t.is_zero()) r.line("  (zero)");
  j["rows"] = std::move(rows);
  r.data[key] = std::move(j);
}

}  // namespace massey::cli
