#include "homlie/instance_file.hpp"
#include "homlie/hom_structures.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace homlie {

namespace {

using json = nlohmann::ordered_json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

class Reader {
public:
  explicit Reader(std::vector<std::string> params) : m_params(params.begin(), params.end()) {}

  ParamExpr expr(const json& j, const std::string& where) const {
    std::string text;
    if (j.is_string()) text = j.get<std::string>();
    else if (j.is_number_integer()) text = j.dump();
    else throw InvalidInstance(where + ": expected an expression string");
    ParamExpr e;
    try {
      e = ParamExpr::parse(text);
    } catch (const SyntaxError& err) {
      throw SyntaxError(where + ": " + err.what(), 0, err.column());
    }
    for (const auto& n : e.names())
      if (!m_params.count(n)) throw UndeclaredParameter(where + ": parameter '" + n + "' is not declared");
    return e;
  }

  std::vector<ParamExpr> vector(const json& j, std::size_t n, const std::string& where) const {
    if (!j.is_array()) throw InvalidInstance(where + ": expected an array");
    if (j.size() != n) throw DimensionMismatch(where + ": expected " + std::to_string(n) + " entries");
    std::vector<ParamExpr> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back(expr(j[k], where + "[" + std::to_string(k) + "]"));
    return out;
  }

  ExprMatrix matrix(const json& j, std::size_t n, const std::string& where) const {
    if (!j.is_array()) throw InvalidInstance(where + ": expected an array of rows");
    if (j.size() != n) throw DimensionMismatch(where + ": expected " + std::to_string(n) + " rows");
    ExprMatrix out;
    for (std::size_t r = 0; r < n; ++r) out.push_back(vector(j[r], n, where + "[" + std::to_string(r) + "]"));
    return out;
  }

  std::vector<SparseEntry> entries(const json& j, std::size_t n, bool upper_only, const std::string& where) const {
    if (!j.is_array()) throw InvalidInstance(where + ": expected an array of entries");
    std::vector<SparseEntry> out;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t k = 0; k < j.size(); ++k) {
      const std::string at = where + "[" + std::to_string(k) + "]";
      const json& item = j[k];
      if (!item.is_object() || !item.contains("i") || !item.contains("j") || !item.contains("coeffs"))
        throw InvalidInstance(at + ": entry needs i, j and coeffs");
      if (!item["i"].is_number_integer() || !item["j"].is_number_integer())
        throw InvalidInstance(at + ": i and j must be integers");
      const long i = item["i"].get<long>();
      const long jj = item["j"].get<long>();
      if (i < 1 || jj < 1 || static_cast<std::size_t>(i) > n || static_cast<std::size_t>(jj) > n)
        throw DimensionMismatch(at + ": index out of range 1.." + std::to_string(n));
      if (upper_only && i >= jj) throw InvalidInstance(at + ": bracket entries need i < j");
      if (!seen.insert({i, jj}).second) throw InvalidInstance(at + ": duplicate entry");
      out.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(jj), vector(item["coeffs"], n, at + ".coeffs")});
    }
    return out;
  }

private:
  std::set<std::string> m_params;
};

json expr_json(const ParamExpr& e) { return e.source(); }

json vector_json(const std::vector<ParamExpr>& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(expr_json(e));
  return out;
}

json matrix_json(const ExprMatrix& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(vector_json(row));
  return out;
}

json entries_json(const std::vector<SparseEntry>& entries) {
  json out = json::array();
  for (const auto& e : entries) out.push_back({{"i", e.i}, {"j", e.j}, {"coeffs", vector_json(e.coeffs)}});
  return out;
}

void check_unique_params(const std::vector<std::string>& params) {
  std::set<std::string> seen;
  for (const auto& p : params) {
    if (p.empty() || !(std::isalpha(static_cast<unsigned char>(p[0])) || p[0] == '_'))
      throw InvalidInstance("params: '" + p + "' is not an identifier");
    if (!seen.insert(p).second) throw InvalidInstance("params: '" + p + "' declared twice");
  }
}

RationalMatrix bind_matrix(const ExprMatrix& m, const Bindings& b) {
  RationalMatrix out(m.size(), m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) out(r, c) = m[r][c].evaluate(b);
  return out;
}

RationalVector bind_vector(const std::vector<ParamExpr>& v, const Bindings& b) {
  RationalVector out;
  for (const auto& e : v) out.push_back(e.evaluate(b));
  return out;
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    const auto [line, column] = line_column(text, err.byte == 0 ? 0 : err.byte - 1);
    throw SyntaxError("invalid JSON", line, column);
  }
  if (!doc.is_object()) throw InvalidInstance("instance must be a JSON object");
  static const std::set<std::string> known{"name",  "dimension", "params", "phi", "bracket", "product",
                                           "metric", "omega",     "J",      "basis_names"};
  for (const auto& [key, value] : doc.items())
    if (!known.count(key)) throw InvalidInstance("unknown field '" + key + "'");

  InstanceFile inst;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw InvalidInstance("name must be a string");
    inst.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("dimension") || !doc["dimension"].is_number_unsigned() || doc["dimension"].get<std::size_t>() == 0)
    throw InvalidInstance("dimension must be a positive integer");
  inst.dimension = doc["dimension"].get<std::size_t>();
  const std::size_t n = inst.dimension;

  if (doc.contains("params")) {
    if (!doc["params"].is_array()) throw InvalidInstance("params must be an array of names");
    for (const auto& p : doc["params"]) {
      if (!p.is_string()) throw InvalidInstance("params must be an array of names");
      inst.params.push_back(p.get<std::string>());
    }
  }
  check_unique_params(inst.params);
  const Reader read(inst.params);

  if (!doc.contains("phi")) throw InvalidInstance("phi is required");
  inst.phi = read.matrix(doc["phi"], n, "phi");
  if (doc.contains("bracket")) inst.bracket = read.entries(doc["bracket"], n, true, "bracket");
  if (doc.contains("product")) inst.product = read.entries(doc["product"], n, false, "product");
  if (doc.contains("metric")) inst.metric = read.matrix(doc["metric"], n, "metric");
  if (doc.contains("omega")) inst.omega = read.matrix(doc["omega"], n, "omega");
  if (doc.contains("J")) inst.J = read.matrix(doc["J"], n, "J");
  if (doc.contains("basis_names")) {
    const json& names = doc["basis_names"];
    if (!names.is_array() || names.size() != n) throw DimensionMismatch("basis_names: expected " + std::to_string(n) + " names");
    for (const auto& s : names) {
      if (!s.is_string()) throw InvalidInstance("basis_names must be strings");
      inst.basis_names.push_back(s.get<std::string>());
    }
  }
  return inst;
}

std::string serialize_instance(const InstanceFile& inst) {
  json doc;
  doc["name"] = inst.name;
  doc["dimension"] = inst.dimension;
  doc["params"] = inst.params;
  doc["phi"] = matrix_json(inst.phi);
  doc["bracket"] = entries_json(inst.bracket);
  if (inst.product) doc["product"] = entries_json(*inst.product);
  if (inst.metric) doc["metric"] = matrix_json(*inst.metric);
  if (inst.omega) doc["omega"] = matrix_json(*inst.omega);
  if (inst.J) doc["J"] = matrix_json(*inst.J);
  if (!inst.basis_names.empty()) doc["basis_names"] = inst.basis_names;
  return doc.dump(2) + "\n";
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInstance("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

BoundInstance bind_params(const InstanceFile& inst, const Bindings& bindings) {
  for (const auto& p : inst.params)
    if (!bindings.count(p)) throw MissingBinding("no value bound for parameter '" + p + "'");
  for (const auto& [name, value] : bindings)
    if (std::find(inst.params.begin(), inst.params.end(), name) == inst.params.end())
      throw UnusedBinding("parameter '" + name + "' is not declared by the instance");

  const std::size_t n = inst.dimension;
  BoundInstance out;
  out.name = inst.name;
  out.dimension = n;
  out.bindings = bindings;
  out.phi = bind_matrix(inst.phi, bindings);
  out.bracket = RationalTensor(n);
  for (const auto& e : inst.bracket) out.bracket.set_antisymmetric(e.i - 1, e.j - 1, bind_vector(e.coeffs, bindings));
  if (inst.product) {
    RationalTensor p(n);
    for (const auto& e : *inst.product) p.set(e.i - 1, e.j - 1, bind_vector(e.coeffs, bindings));
    if (inst.bracket.empty()) out.bracket = commutator_bracket(p);
    out.product = std::move(p);
  }
  if (inst.metric) out.metric = bind_matrix(*inst.metric, bindings);
  if (inst.omega) out.omega = bind_matrix(*inst.omega, bindings);
  if (inst.J) out.J = bind_matrix(*inst.J, bindings);
  out.basis_names = inst.basis_names;
  if (out.basis_names.empty())
    for (std::size_t k = 1; k <= n; ++k) out.basis_names.push_back("e" + std::to_string(k));
  return out;
}

}  // namespace homlie
