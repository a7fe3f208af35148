// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "discordant/states.hpp"

namespace discordant::cli {

using Json = nlohmann::ordered_json;

/// Malformed or structurally invalid input (exit code 2). Physically invalid
/// states surface as discordant::Error instead (exit code 3).
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FamilySpec {
  std::string name;
  Json params = Json::object();
};

struct ExplicitSpec {
  Dims dims;
  Matrix matrix;
};

/// A state given either by family name and parameters or explicitly:
///   {"family": {"name": "bell_mixture", "params": {"a": 0.3}}}
///   {"explicit": {"dims": [2, 2], "matrix": [[re, im], ...]}}
/// The explicit matrix is row-major with dims[0]*dims[1] squared entries.
struct StateDocument {
  std::optional<FamilySpec> family;
  std::optional<ExplicitSpec> explicit_state;

  static StateDocument from_json(const Json& j);
  static StateDocument parse(std::string_view text);
  static StateDocument of_family(std::string name, Json params = Json::object());
  static StateDocument of_state(const BipartiteState& state);

  Json to_json() const;
  BipartiteState build() const;
};

struct FamilyInfo {
  std::string name;
  std::string params;
  std::string description;
};

const std::vector<FamilyInfo>& families();

/// "k=v" with v a number, a word, or a comma-separated list of either.
std::pair<std::string, Json> parse_param(std::string_view text);

Json complex_matrix_json(const Matrix& m);
/// Columns of a basis as a list of vectors of [re, im] pairs.
Json basis_json(const Matrix& basis);

}  // namespace discordant::cli
