#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "massey/invariants.hpp"

namespace massey::cli {

using Json = nlohmann::ordered_json;

enum Exit { Ok = 0, Undefined = 1, InputError = 2 };

struct Report {
  Json data = Json::object();
  std::vector<std::string> lines;
  int exit_code = Ok;

  void line(std::string s) { lines.push_back(std::move(s)); }
  std::string render(bool machine) const;
};

Json rational(const Rational& q);
Json vector_json(std::span<const Rational> v);
// "h2_0 - 1/2*h2_1", or "0".
std::string format_class(const GradedBasis& h, std::span<const Rational> v);

// Matrix of an obstruction tensor: shape, rank, domain degrees and the nonzero rows.
void add_tensor(Report& r, const std::string& key, const InvariantContext& ctx, const ObstructionTensor& t);

}  // namespace massey::cli
