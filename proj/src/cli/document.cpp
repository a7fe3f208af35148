// SPDX-License-Identifier: Apache-2.0
#include "discordant/cli/document.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "discordant/error.hpp"

namespace discordant::cli {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw DocumentError(msg); }

double number(const Json& j, const std::string& what) {
  if (!j.is_number()) fail(what + " must be a number");
  return j.get<double>();
}

int integer(const Json& j, const std::string& what) {
  const double x = number(j, what);
  if (x != std::floor(x) || std::abs(x) > 1e9) fail(what + " must be an integer");
  return static_cast<int>(x);
}

std::vector<double> number_list(const Json& j, const std::string& what) {
  if (j.is_number()) return {j.get<double>()};
  if (!j.is_array()) fail(what + " must be a list of numbers");
  std::vector<double> out;
  for (const Json& x : j) out.push_back(number(x, what));
  return out;
}

Dims dims_param(const Json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) fail(what + " must be [d_A, d_B]");
  const Dims d{integer(j[0], what), integer(j[1], what)};
  if (d.a < 1 || d.b < 1 || d.a > 16 || d.b > 16) fail(what + " entries must lie in 1..16");
  return d;
}

class Params {
 public:
  Params(const std::string& family, const Json& j) : family_(family), j_(j) {
    if (!j_.is_object()) fail("params of " + family + " must be an object");
  }

  void allow(std::initializer_list<const char*> keys) const {
    for (const auto& [k, v] : j_.items()) {
      bool known = false;
      for (const char* key : keys) known = known || k == key;
      if (!known) fail("unknown parameter '" + k + "' for family " + family_);
    }
  }
  bool has(const char* key) const { return j_.contains(key); }
  const Json& at(const char* key) const { return j_.at(key); }
  std::string what(const char* key) const { return family_ + "." + key; }
  double num(const char* key, double fallback) const {
    return has(key) ? number(at(key), what(key)) : fallback;
  }
  int integer_or(const char* key, int fallback) const {
    return has(key) ? integer(at(key), what(key)) : fallback;
  }

 private:
  std::string family_;
  const Json& j_;
};

std::uint64_t seed_param(const Params& p) {
  const int seed = p.integer_or("seed", 1);
  if (seed < 0) fail(p.what("seed") + " must be non-negative");
  return static_cast<std::uint64_t>(seed);
}

BipartiteState build_family(const FamilySpec& f) {
  const Params p(f.name, f.params);
  if (f.name == "example_state") {
    p.allow({"b", "c"});
    return example_state(p.num("b", 0.5), p.num("c", 0.5));
  }
  if (f.name == "bell_mixture") {
    p.allow({"a"});
    return bell_mixture(p.num("a", 0.5));
  }
  if (f.name == "teahouse_ensemble") {
    p.allow({"weights"});
    std::vector<double> w(9, 1.0 / 9.0);
    if (p.has("weights")) {
      const Json& j = p.at("weights");
      if (j.is_string()) {
        const std::string preset = j.get<std::string>();
        if (preset == "doubled") {
          const auto d = teahouse_doubled_weights();
          w.assign(d.begin(), d.end());
        } else if (preset != "equal") {
          fail("teahouse_ensemble.weights must be 'equal', 'doubled' or nine numbers");
        }
      } else {
        w = number_list(j, p.what("weights"));
        if (w.size() != 9) fail("teahouse_ensemble.weights needs nine numbers");
      }
    }
    return teahouse_ensemble(w).density();
  }
  if (f.name == "classical_classical") {
    p.allow({"dims", "w"});
    const Dims d = p.has("dims") ? dims_param(p.at("dims"), p.what("dims")) : Dims{2, 2};
    Eigen::MatrixXd w = Eigen::MatrixXd::Constant(d.a, d.b, 1.0 / d.total());
    if (p.has("w")) {
      const std::vector<double> flat = number_list(p.at("w"), p.what("w"));
      if (static_cast<int>(flat.size()) != d.total()) fail("classical_classical.w needs d_A*d_B entries");
      for (int a = 0; a < d.a; ++a)
        for (int b = 0; b < d.b; ++b) w(a, b) = flat[a * d.b + b];
    }
    return classical_classical_state(w);
  }
  if (f.name == "zero_discord") {
    p.allow({"p", "dim_b", "seed"});
    const std::vector<double> prob = p.has("p") ? number_list(p.at("p"), p.what("p")) : std::vector<double>{0.5, 0.5};
    const int dim_b = p.integer_or("dim_b", 2);
    if (prob.empty() || prob.size() > 16) fail("zero_discord.p needs 1..16 entries");
    if (dim_b < 1 || dim_b > 16) fail("zero_discord.dim_b must lie in 1..16");
    const std::uint64_t seed = seed_param(p);
    const int dim_a = static_cast<int>(prob.size());
    const Matrix u = random_unitary(dim_a, seed);
    std::vector<Vector> basis;
    std::vector<HermitianOperator> sigmas;
    for (int a = 0; a < dim_a; ++a) {
      basis.emplace_back(u.col(a));
      sigmas.push_back(random_state({dim_b, 1}, dim_b, seed + 1 + a).rho());
    }
    return zero_discord_state(prob, basis, sigmas);
  }
  if (f.name == "random") {
    p.allow({"dims", "rank", "seed"});
    const Dims d = p.has("dims") ? dims_param(p.at("dims"), p.what("dims")) : Dims{2, 2};
    return random_state(d, p.integer_or("rank", d.total()), seed_param(p));
  }
  fail("unknown family '" + f.name + "' (see 'states list')");
}

}  // namespace

const std::vector<FamilyInfo>& families() {
  static const std::vector<FamilyInfo> list{
      {"example_state", "b=0.5 c=0.5", "(1 + b sz(x)1 + c sx(x)sx)/4 on two qubits"},
      {"bell_mixture", "a=0.5", "a |Psi+><Psi+| + (1-a) |Psi-><Psi-|"},
      {"teahouse_ensemble", "weights=equal|doubled|w1,...,w9",
       "mixture of the nine 3x3 teahouse product states"},
      {"classical_classical", "dims=2,2 w=w11,w12,...", "sum w_ab |a><a| (x) |b><b|, w row-major"},
      {"zero_discord", "p=0.5,0.5 dim_b=2 seed=1",
       "sum p_a |e_a><e_a| (x) sigma_a with a seeded random basis and seeded sigmas"},
      {"random", "dims=2,2 rank=4 seed=1", "seeded induced-measure random state"},
  };
  return list;
}

StateDocument StateDocument::from_json(const Json& j) {
  if (!j.is_object()) fail("state document must be a JSON object");
  const bool has_family = j.contains("family");
  const bool has_explicit = j.contains("explicit");
  if (has_family == has_explicit) fail("state document needs exactly one of 'family' or 'explicit'");
  for (const auto& [k, v] : j.items()) {
    if (k != "family" && k != "explicit") fail("unknown key '" + k + "' in state document");
  }

  StateDocument doc;
  if (has_family) {
    const Json& f = j.at("family");
    if (!f.is_object() || !f.contains("name") || !f.at("name").is_string()) {
      fail("family needs a string 'name'");
    }
    FamilySpec spec{f.at("name").get<std::string>(), Json::object()};
    if (f.contains("params")) {
      if (!f.at("params").is_object()) fail("family params must be an object");
      spec.params = f.at("params");
    }
    doc.family = std::move(spec);
    return doc;
  }

  const Json& e = j.at("explicit");
  if (!e.is_object() || !e.contains("dims") || !e.contains("matrix")) {
    fail("explicit state needs 'dims' and 'matrix'");
  }
  const Dims dims = dims_param(e.at("dims"), "explicit.dims");
  const Json& m = e.at("matrix");
  const int n = dims.total();
  if (!m.is_array() || static_cast<int>(m.size()) != n * n) {
    std::ostringstream os;
    os << "explicit.matrix must hold " << n * n << " [re, im] entries (row-major)";
    fail(os.str());
  }
  Matrix rho(n, n);
  for (int k = 0; k < n * n; ++k) {
    const Json& z = m[k];
    if (!z.is_array() || z.size() != 2) fail("explicit.matrix entries must be [re, im] pairs");
    rho(k / n, k % n) = Complex(number(z[0], "explicit.matrix"), number(z[1], "explicit.matrix"));
  }
  doc.explicit_state = ExplicitSpec{dims, rho};
  return doc;
}

StateDocument StateDocument::parse(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  return from_json(j);
}

StateDocument StateDocument::of_family(std::string name, Json params) {
  StateDocument doc;
  doc.family = FamilySpec{std::move(name), std::move(params)};
  return doc;
}

StateDocument StateDocument::of_state(const BipartiteState& state) {
  StateDocument doc;
  doc.explicit_state = ExplicitSpec{state.dims(), state.matrix()};
  return doc;
}

Json StateDocument::to_json() const {
  if (family) return Json{{"family", Json{{"name", family->name}, {"params", family->params}}}};
  const ExplicitSpec& e = *explicit_state;
  return Json{{"explicit", Json{{"dims", {e.dims.a, e.dims.b}}, {"matrix", complex_matrix_json(e.matrix)}}}};
}

BipartiteState StateDocument::build() const {
  if (family) return build_family(*family);
  return BipartiteState(explicit_state->dims, explicit_state->matrix);
}

std::pair<std::string, Json> parse_param(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) fail("--param expects key=value, got '" + std::string(text) + "'");
  const std::string key(text.substr(0, eq));
  const std::string value(text.substr(eq + 1));
  if (value.empty()) fail("--param " + key + " has an empty value");

  std::vector<Json> items;
  std::stringstream ss(value);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) fail("--param " + key + " has an empty list entry");
    errno = 0;
    char* end = nullptr;
    const long long i = std::strtoll(part.c_str(), &end, 10);
    if (end == part.c_str() + part.size() && errno == 0) {
      items.emplace_back(i);
      continue;
    }
    errno = 0;
    const double x = std::strtod(part.c_str(), &end);
    if (end == part.c_str() + part.size() && errno == 0) {
      items.emplace_back(x);
    } else {
      items.emplace_back(part);
    }
  }
  if (items.size() == 1 && value.back() != ',') return {key, items.front()};
  return {key, Json(items)};
}

Json complex_matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back({m(r, c).real(), m(r, c).imag()});
  return out;
}

Json basis_json(const Matrix& basis) {
  Json out = Json::array();
  for (Eigen::Index c = 0; c < basis.cols(); ++c) {
    Json v = Json::array();
    for (Eigen::Index r = 0; r < basis.rows(); ++r) v.push_back({basis(r, c).real(), basis(r, c).imag()});
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace discordant::cli
