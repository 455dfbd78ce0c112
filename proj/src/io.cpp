#include "lforge/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "json.hpp"

namespace lforge {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Rational json_rational(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  throw InputError("matrix entries must be integers or \"p/q\" strings");
}

}  // namespace

std::vector<Polynomial> parse_polynomials(const std::vector<std::string>& texts, std::size_t dimension) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    try {
      out.push_back(parse_polynomial(texts[i], dimension));
    } catch (const SyntaxError& e) {
      throw InputError("polynomial " + std::to_string(i + 1) + ": " + e.what());
    } catch (const DimensionError& e) {
      throw InputError("polynomial " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

AlgebraSpec parse_algebra_spec(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw InputError("algebra file must be a JSON object");
  if (!doc.contains("dimension") || !doc["dimension"].is_number_unsigned() || doc["dimension"].get<long>() < 1)
    throw InputError("algebra file needs a positive integer \"dimension\"");
  if (!doc.contains("generators") || !doc["generators"].is_array() || doc["generators"].empty())
    throw InputError("algebra file needs a nonempty \"generators\" list");
  AlgebraSpec spec;
  spec.dimension = doc["dimension"].get<std::size_t>();
  std::vector<std::string> texts;
  for (const auto& g : doc["generators"]) {
    if (!g.is_string()) throw InputError("generators must be strings");
    texts.push_back(g.get<std::string>());
  }
  spec.generators = parse_polynomials(texts, spec.dimension);
  if (doc.contains("degree_cap")) {
    if (!doc["degree_cap"].is_number_unsigned()) throw InputError("\"degree_cap\" must be a non-negative integer");
    spec.degree_cap = doc["degree_cap"].get<unsigned>();
  }
  return spec;
}

AlgebraSpec load_algebra_file(const std::string& path) { return parse_algebra_spec(read_file(path)); }

FiniteOrthogonalGroup parse_group_spec(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw InputError("group file must be a JSON object");
  if (doc.contains("builtin")) {
    if (!doc["builtin"].is_string()) throw InputError("\"builtin\" must be a string");
    return parse_builtin(doc["builtin"].get<std::string>()).group;
  }
  if (!doc.contains("dimension") || !doc["dimension"].is_number_unsigned())
    throw InputError("group file needs \"dimension\" or \"builtin\"");
  const auto n = doc["dimension"].get<std::size_t>();
  if (!doc.contains("matrices") || !doc["matrices"].is_array()) throw InputError("group file needs \"matrices\"");
  std::vector<RationalMatrix> elements;
  for (const auto& m : doc["matrices"]) {
    if (!m.is_array() || m.size() != n) throw InputError("each matrix needs " + std::to_string(n) + " rows");
    RationalMatrix rows;
    for (const auto& row : m) {
      if (!row.is_array() || row.size() != n) throw InputError("each row needs " + std::to_string(n) + " entries");
      std::vector<Rational> r;
      for (const auto& v : row) r.push_back(json_rational(v));
      rows.push_back(std::move(r));
    }
    elements.push_back(std::move(rows));
  }
  return FiniteOrthogonalGroup::exact(n, std::move(elements));
}

FiniteOrthogonalGroup load_group_file(const std::string& path) { return parse_group_spec(read_file(path)); }

Builtin parse_builtin(const std::string& spec) {
  static const std::regex paren(R"(^\s*([a-z_]+)\s*\(\s*([0-9]+)\s*(?:,\s*([0-9]+)\s*)?\)\s*$)");
  static const std::regex colon(R"(^\s*([a-z_]+)\s*:\s*([0-9]+)\s*(?::\s*([0-9]+)\s*)?$)");
  std::smatch m;
  if (!std::regex_match(spec, m, paren) && !std::regex_match(spec, m, colon))
    throw InputError("unrecognized built-in \"" + spec + "\"");
  const std::string name = m[1];
  const unsigned long a = std::stoul(m[2]);
  const bool has_b = m[3].matched;
  const unsigned long b = has_b ? std::stoul(m[3]) : 0;
  auto want = [&](bool two) {
    if (two != has_b) throw InputError("built-in " + name + " takes " + (two ? "2" : "1") + " argument(s)");
  };
  if (a == 0) throw InputError("built-in arguments must be positive");
  if (name == "neg_id") {
    want(false);
    return {spec, neg_id_group(a), std::nullopt};
  }
  if (name == "signed_permutations") {
    want(false);
    if (a > 4) throw InputError("signed_permutations is limited to n <= 4");
    return {spec, signed_permutation_group(a), std::nullopt};
  }
  if (name == "cyclic_sign") {
    want(true);
    if (b == 0 || b > a) throw InputError("cyclic_sign axis must lie in 1.." + std::to_string(a));
    return {spec, cyclic_sign_group(a, b), std::nullopt};
  }
  if (name == "dihedral") {
    want(false);
    return {spec, dihedral_group(static_cast<unsigned>(a)), dihedral_invariants(static_cast<unsigned>(a))};
  }
  throw InputError("unknown built-in \"" + name + "\"");
}

}  // namespace lforge
