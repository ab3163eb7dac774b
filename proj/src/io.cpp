#include "totpos/io.hpp"

#include <fstream>
#include <sstream>

namespace totpos::io {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
  const auto it = j.find(name);
  if (it == j.end()) throw std::invalid_argument(std::string("missing field '") + name + "'");
  return *it;
}

int int_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer())
    throw std::invalid_argument(std::string("field '") + name + "' must be an integer");
  return v.get<int>();
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

json to_json(const Rat& value) { return to_string(value); }

Rat rat_from_json(const json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  throw std::invalid_argument("rational must be a \"p/q\" string or an integer, got " + j.dump());
}

json to_json(const RatMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(i, c)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

RatMatrix matrix_from_json(const json& j) {
  const int rows = int_field(j, "rows");
  const int cols = int_field(j, "cols");
  if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be nonnegative");
  const json& entries = field(j, "entries");
  if (!entries.is_array()) throw std::invalid_argument("'entries' must be an array");
  std::vector<const json*> flat;
  for (const auto& item : entries) {
    if (item.is_array()) {
      if (static_cast<int>(item.size()) != cols)
        throw std::invalid_argument("matrix row has " + std::to_string(item.size()) +
                                    " entries, expected " + std::to_string(cols));
      for (const auto& v : item) flat.push_back(&v);
    } else {
      flat.push_back(&item);
    }
  }
  if (static_cast<long>(flat.size()) != static_cast<long>(rows) * cols)
    throw std::invalid_argument("matrix has " + std::to_string(flat.size()) +
                                " entries, expected rows x cols = " +
                                std::to_string(static_cast<long>(rows) * cols));
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) m(i, c) = rat_from_json(*flat[i * cols + c]);
  return m;
}

RatMatrix matrix_from_csv(std::string_view text) {
  std::vector<std::vector<Rat>> rows;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    std::vector<Rat> row;
    std::istringstream cells(stripped);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(parse_rat(trim(cell)));
    if (!rows.empty() && row.size() != rows.front().size())
      throw std::invalid_argument("CSV rows have unequal length");
    rows.push_back(std::move(row));
  }
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.empty() ? 0 : rows.front().size());
  RatMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index k = 0; k < c; ++k) m(i, k) = rows[i][k];
  return m;
}

json to_json(const MinorIndex& idx) { return {{"alpha", idx.alpha}, {"beta", idx.beta}}; }

json to_json(const Certificate& c) {
  json out = {{"label", std::string(to_string(c.label))}};
  if (c.witness) {
    json w = to_json(c.witness->index);
    w["value"] = to_json(c.witness->value);
    out["witness"] = std::move(w);
  }
  return out;
}

Certificate certificate_from_json(const json& j) {
  Certificate c;
  c.label = parse_class_label(field(j, "label").get<std::string>());
  if (j.contains("witness")) {
    const json& w = j["witness"];
    c.witness = Witness{{field(w, "alpha").get<IndexSet>(), field(w, "beta").get<IndexSet>()},
                        rat_from_json(field(w, "value"))};
  }
  return c;
}

json to_json(const BidiagonalFactorization& f) {
  json w = json::array();
  json w_prime = json::array();
  for (int j = 1; j < f.n(); ++j)
    for (int k = j; k < f.n(); ++k) {
      w.push_back({{"j", j}, {"k", k}, {"value", to_json(f.w(j, k))}});
      w_prime.push_back({{"j", j}, {"k", k + 1}, {"value", to_json(f.w_prime(j, k + 1))}});
    }
  json d = json::array();
  for (Eigen::Index i = 0; i < f.d().size(); ++i) d.push_back(to_json(f.d()(i)));
  return {{"n", f.n()}, {"w", std::move(w)}, {"w_prime", std::move(w_prime)}, {"d", std::move(d)}};
}

BidiagonalFactorization factorization_from_json(const json& j) {
  const int n = int_field(j, "n");
  if (n < 1) throw std::invalid_argument("factorization dimension must be >= 1");
  BidiagonalFactorization f(n);
  for (const auto& item : field(j, "w")) {
    const int jj = int_field(item, "j");
    const int k = int_field(item, "k");
    if (jj < 1 || k < jj || k > n - 1)
      throw std::invalid_argument("w index (" + std::to_string(jj) + "," + std::to_string(k) +
                                  ") outside 1 <= j <= k <= n-1");
    f.w(jj, k) = rat_from_json(field(item, "value"));
  }
  for (const auto& item : field(j, "w_prime")) {
    const int jj = int_field(item, "j");
    const int k1 = int_field(item, "k");
    if (jj < 1 || k1 - 1 < jj || k1 > n)
      throw std::invalid_argument("w_prime index (" + std::to_string(jj) + "," +
                                  std::to_string(k1) + ") outside 1 <= j <= k <= n-1");
    f.w_prime(jj, k1) = rat_from_json(field(item, "value"));
  }
  const json& d = field(j, "d");
  if (!d.is_array() || static_cast<int>(d.size()) != n)
    throw std::invalid_argument("'d' must hold n entries");
  for (int i = 0; i < n; ++i) f.d()(i) = rat_from_json(d[i]);
  f.validate();
  return f;
}

json to_json(const CentralizerShape& s) { return {{"composition", s.composition}}; }

CentralizerShape shape_from_json(const json& j) {
  return {field(j, "composition").get<std::vector<int>>()};
}

json to_json(const AutomorphismSpec& s) {
  json r = json::array();
  for (Eigen::Index i = 0; i < s.r.size(); ++i) r.push_back(to_json(s.r(i)));
  return {{"n", s.n},
          {"orientation", std::string(to_string(s.orientation))},
          {"r", std::move(r)},
          {"mu_exponent", to_json(s.mu_exponent)}};
}

AutomorphismSpec spec_from_json(const json& j) {
  AutomorphismSpec s;
  s.n = int_field(j, "n");
  s.orientation = parse_orientation(field(j, "orientation").get<std::string>());
  const json& r = field(j, "r");
  if (!r.is_array()) throw std::invalid_argument("'r' must be an array");
  s.r.resize(static_cast<Eigen::Index>(r.size()));
  for (std::size_t i = 0; i < r.size(); ++i) s.r(static_cast<Eigen::Index>(i)) = rat_from_json(r[i]);
  s.mu_exponent = rat_from_json(field(j, "mu_exponent"));
  s.validate();
  return s;
}

json to_json(const RadicalScalar& s) {
  json factors = json::array();
  for (const auto& [p, e] : s.factors())
    factors.push_back({{"prime", p.str()}, {"exponent", to_json(e)}});
  return {{"factors", std::move(factors)}, {"text", s.str()}};
}

RadicalScalar radical_from_json(const json& j) {
  RadicalScalar::FactorMap factors;
  for (const auto& item : field(j, "factors")) {
    const json& p = field(item, "prime");
    Integer prime = p.is_string() ? Integer(p.get<std::string>()) : Integer(p.get<long long>());
    factors[prime] += rat_from_json(field(item, "exponent"));
  }
  return RadicalScalar::from_factors(std::move(factors));
}

json to_json(const ScaledMatrix& m) {
  json out = {{"scale", to_json(m.scale())}, {"body", to_json(m.body())}};
  if (const auto value = m.to_rational()) out["value"] = to_json(*value);
  return out;
}

ScaledMatrix scaled_from_json(const json& j) {
  RadicalScalar scale = j.contains("scale") ? radical_from_json(j["scale"]) : RadicalScalar{};
  return ScaledMatrix(std::move(scale), matrix_from_json(field(j, "body")));
}

json to_json(const Generator& g) {
  if (const auto* e = std::get_if<ElementaryBidiagonal>(&g))
    return {{"kind", e->kind == BidiagonalKind::lower ? "lower" : "upper"},
            {"n", e->n},
            {"k", e->k},
            {"weight", to_json(e->weight)}};
  const auto& d = std::get<DiagonalGenerator>(g).d;
  json entries = json::array();
  for (Eigen::Index i = 0; i < d.size(); ++i) entries.push_back(to_json(d(i)));
  return {{"kind", "diagonal"}, {"d", std::move(entries)}};
}

Generator generator_from_json(const json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "diagonal") {
    const json& d = field(j, "d");
    RatVector v(static_cast<Eigen::Index>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) v(static_cast<Eigen::Index>(i)) = rat_from_json(d[i]);
    DiagonalGenerator g{v};
    to_matrix(g);  // validates positivity
    return g;
  }
  if (kind != "lower" && kind != "upper")
    throw std::invalid_argument("generator kind must be lower, upper or diagonal");
  ElementaryBidiagonal g{int_field(j, "n"),
                         kind == "lower" ? BidiagonalKind::lower : BidiagonalKind::upper,
                         int_field(j, "k"), rat_from_json(field(j, "weight"))};
  to_matrix(g);
  return g;
}

json to_json(const GeneratorImageTable& t) {
  json entries = json::array();
  for (const auto& e : t.entries)
    entries.push_back({{"input", to_json(e.input)}, {"image", to_json(e.image)}});
  return {{"n", t.n}, {"entries", std::move(entries)}};
}

GeneratorImageTable table_from_json(const json& j) {
  GeneratorImageTable t;
  t.n = int_field(j, "n");
  for (const auto& e : field(j, "entries"))
    t.entries.push_back({generator_from_json(field(e, "input")), scaled_from_json(field(e, "image"))});
  return t;
}

json to_json(const Counterexample& c) {
  return {{"reason", c.reason}, {"A", to_json(c.a)}, {"B", to_json(c.b)}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json read_json_file(const std::string& path) { return json::parse(read_file(path)); }

}  // namespace totpos::io
