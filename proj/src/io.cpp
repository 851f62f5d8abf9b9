#include "tlie/io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

namespace tlie::io {

namespace {

std::vector<std::size_t> parse_indices(const std::string& key, std::size_t count,
                                       std::size_t dim, char sep = ',') {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= key.size()) {
    std::size_t end = key.find(sep, start);
    if (end == std::string::npos) end = key.size();
    const std::string part = key.substr(start, end - start);
    try {
      long v = std::stol(part);
      if (v < 1 || static_cast<std::size_t>(v) > dim)
        throw Error(ErrorKind::parse, "index out of range in key '" + key + "'");
      out.push_back(static_cast<std::size_t>(v - 1));
    } catch (const std::invalid_argument&) {
      throw Error(ErrorKind::parse, "bad index in key '" + key + "'");
    } catch (const std::out_of_range&) {
      throw Error(ErrorKind::parse, "bad index in key '" + key + "'");
    }
    start = end + 1;
    if (end == key.size()) break;
  }
  if (out.size() != count)
    throw Error(ErrorKind::parse, "expected " + std::to_string(count) + " indices in '" + key + "'");
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i - 1] >= out[i])
      throw Error(ErrorKind::parse, "indices must be strictly increasing in '" + key + "'");
  return out;
}

json load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::parse, path.string() + ": " + e.what());
  }
}

const json& require(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorKind::parse, std::string("missing field '") + key + "'");
  return *it;
}

void require_type(const json& j, const std::string& expected) {
  if (require(j, "type").get<std::string>() != expected)
    throw Error(ErrorKind::parse, "expected document of type '" + expected + "'");
}

/// Inline object, or a path string resolved against the referencing file.
json resolve_ref(const json& j, const std::filesystem::path& base) {
  if (j.is_string()) return load_file(base / j.get<std::string>());
  return j;
}

Representation representation_from_json(const json& j, const std::filesystem::path& base);

TwoCochain two_cochain_from_json(const json& j, std::size_t dim_g, std::size_t dim_v) {
  TwoCochain phi(dim_g, dim_v);
  for (const auto& [key, value] : require(j, "values").items()) {
    auto idx = parse_indices(key, 3, dim_g);
    phi.set_value(idx[0], idx[1], idx[2], vec_from_json(value));
  }
  return phi;
}

TwistedRbo twisted_rbo_from_json(const json& j, const std::filesystem::path& base) {
  require_type(j, "twisted_rbo");
  Representation raw = representation_from_json(resolve_ref(require(j, "representation"), base), base);
  ThreeLieAlgebra carrier = raw.carrier();
  if (!verify_fundamental_identity(carrier).passed())
    throw Error(ErrorKind::unverified_input, "operator context: carrier fails the FI check");
  Representation rep(std::move(carrier), raw.dim_v());
  for (std::size_t p = 0; p < pair_count(rep.dim()); ++p) {
    auto [i, j2] = pair_at(rep.dim(), p);
    rep.set_rho(i, j2, raw.rho_slot(p));
  }
  if (!verify_representation(rep).passed())
    throw Error(ErrorKind::unverified_input, "operator context: rho fails the representation check");
  TwoCochain phi = two_cochain_from_json(resolve_ref(require(j, "phi"), base), rep.dim(), rep.dim_v());
  Report cr = verify_2cocycle(rep, phi);
  if (!cr.passed())
    throw Error(ErrorKind::unverified_input, "operator context: phi fails the 2-cocycle check");
  Matrix t = matrix_from_json(require(j, "T"));
  return make_twisted_rbo(std::move(rep), std::move(phi), std::move(t));
}

Representation representation_from_json(const json& j, const std::filesystem::path& base) {
  require_type(j, "representation");
  ThreeLieAlgebra carrier = algebra_from_json(resolve_ref(require(j, "carrier"), base));
  std::size_t dim_v = require(j, "dim_v").get<std::size_t>();
  Representation rep(std::move(carrier), dim_v);
  if (j.contains("rho"))
    for (const auto& [key, value] : j["rho"].items()) {
      auto idx = parse_indices(key, 2, rep.dim());
      rep.set_rho(idx[0], idx[1], matrix_from_json(value));
    }
  return rep;
}

}  // namespace

json to_json(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(tlie::to_string(x));
  return out;
}

Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::parse, "expected an array of rationals");
  Vec out;
  for (const auto& x : j) out.push_back(rational_from_string(x.get<std::string>()));
  return out;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::parse, "expected a matrix (array of rows)");
  std::vector<Vec> rows;
  for (const auto& row : j) rows.push_back(vec_from_json(row));
  return Matrix::from_rows(rows);
}

json to_json(const ThreeLieAlgebra& a) {
  json brackets = json::object();
  for (std::size_t t = 0; t < triple_count(a.dim()); ++t) {
    if (is_zero(a.canonical_slot(t))) continue;
    auto [i, j, k] = triple_at(a.dim(), t);
    brackets[std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1)] =
        to_json(a.canonical_slot(t));
  }
  return json{{"type", "three_lie_algebra"}, {"dim", a.dim()}, {"brackets", brackets}};
}

ThreeLieAlgebra algebra_from_json(const json& j) {
  require_type(j, "three_lie_algebra");
  std::size_t dim = require(j, "dim").get<std::size_t>();
  ThreeLieAlgebra a(dim);
  if (j.contains("brackets"))
    for (const auto& [key, value] : j["brackets"].items()) {
      auto idx = parse_indices(key, 3, dim);
      Vec v = vec_from_json(value);
      if (v.size() != dim) throw Error(ErrorKind::parse, "bracket value has wrong length");
      a.set_bracket(idx[0], idx[1], idx[2], std::move(v));
    }
  return a;
}

json to_json(const Representation& rep) {
  json rho = json::object();
  for (std::size_t p = 0; p < pair_count(rep.dim()); ++p) {
    if (rep.rho_slot(p).is_zero()) continue;
    auto [i, j] = pair_at(rep.dim(), p);
    rho[std::to_string(i + 1) + "," + std::to_string(j + 1)] = to_json(rep.rho_slot(p));
  }
  return json{{"type", "representation"},
              {"carrier", to_json(rep.carrier())},
              {"dim_v", rep.dim_v()},
              {"rho", rho}};
}

json to_json(const TwoCochain& phi) {
  json values = json::object();
  for (std::size_t t = 0; t < triple_count(phi.dim_g()); ++t) {
    if (is_zero(phi.slot(t))) continue;
    auto [i, j, k] = triple_at(phi.dim_g(), t);
    values[std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1)] =
        to_json(phi.slot(t));
  }
  return json{{"type", "two_cochain"}, {"dim_g", phi.dim_g()}, {"dim_v", phi.dim_v()},
              {"values", values}};
}

json to_json(const TwistedRbo& op) {
  return json{{"type", "twisted_rbo"},
              {"representation", to_json(op.rep)},
              {"phi", to_json(op.phi)},
              {"T", to_json(op.t)}};
}

json to_json(const NsThreeLie& a) {
  json curly = json::object();
  for (std::size_t p = 0; p < pair_count(a.dim()); ++p) {
    auto [i, j] = pair_at(a.dim(), p);
    for (std::size_t k = 0; k < a.dim(); ++k) {
      Vec v = a.curly_basis(i, j, k);
      if (is_zero(v)) continue;
      curly[std::to_string(i + 1) + "," + std::to_string(j + 1) + "|" + std::to_string(k + 1)] =
          to_json(v);
    }
  }
  json square = json::object();
  for (std::size_t t = 0; t < triple_count(a.dim()); ++t) {
    auto [i, j, k] = triple_at(a.dim(), t);
    Vec v = a.square_basis(i, j, k);
    if (is_zero(v)) continue;
    square[std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1)] =
        to_json(v);
  }
  return json{{"type", "ns_three_lie"}, {"dim", a.dim()}, {"curly", curly}, {"square", square}};
}

json to_json(const Report& report) {
  json violations = json::array();
  for (const auto& v : report.violations)
    violations.push_back(json{{"tuple", v.tuple}, {"lhs", to_json(v.lhs)}, {"rhs", to_json(v.rhs)}});
  json out{{"subject", report.subject},
           {"outcome", tlie::to_string(report.outcome)},
           {"tuples_checked", report.tuples_checked},
           {"violations", violations},
           {"elapsed_ms", report.elapsed_ms}};
  if (!report.skipped.empty()) out["skipped"] = report.skipped;
  if (!report.message.empty()) out["message"] = report.message;
  return out;
}

json to_json(const std::vector<CohomologyRow>& rows) {
  json table = json::array();
  for (const auto& r : rows)
    table.push_back(json{{"degree", r.degree},
                         {"cochains", r.cochains},
                         {"z", r.cocycles},
                         {"b", r.coboundaries},
                         {"h", r.cohomology}});
  return json{{"subject", "cohomology"}, {"rows", table}};
}

ThreeLieAlgebra load_algebra(const std::filesystem::path& path) {
  return algebra_from_json(load_file(path));
}

Representation load_representation(const std::filesystem::path& path) {
  return representation_from_json(load_file(path), path.parent_path());
}

Matrix load_linear_map(const std::filesystem::path& path) {
  json j = load_file(path);
  require_type(j, "linear_map");
  return matrix_from_json(require(j, "matrix"));
}

TwoCochain load_two_cochain(const std::filesystem::path& path) {
  json j = load_file(path);
  require_type(j, "two_cochain");
  TwoCochain phi(require(j, "dim_g").get<std::size_t>(), require(j, "dim_v").get<std::size_t>());
  for (const auto& [key, value] : require(j, "values").items()) {
    auto idx = parse_indices(key, 3, phi.dim_g());
    phi.set_value(idx[0], idx[1], idx[2], vec_from_json(value));
  }
  return phi;
}

TwistedRbo load_twisted_rbo(const std::filesystem::path& path) {
  return twisted_rbo_from_json(load_file(path), path.parent_path());
}

NsThreeLie load_ns(const std::filesystem::path& path) {
  json j = load_file(path);
  require_type(j, "ns_three_lie");
  std::size_t dim = require(j, "dim").get<std::size_t>();
  NsThreeLie a(dim);
  if (j.contains("curly"))
    for (const auto& [key, value] : j["curly"].items()) {
      std::size_t bar = key.find('|');
      if (bar == std::string::npos)
        throw Error(ErrorKind::parse, "curly key must look like 'i,j|k': '" + key + "'");
      auto pair_idx = parse_indices(key.substr(0, bar), 2, dim);
      auto k_idx = parse_indices(key.substr(bar + 1), 1, dim);
      a.set_curly(pair_idx[0], pair_idx[1], k_idx[0], vec_from_json(value));
    }
  if (j.contains("square"))
    for (const auto& [key, value] : j["square"].items()) {
      auto idx = parse_indices(key, 3, dim);
      a.set_square(idx[0], idx[1], idx[2], vec_from_json(value));
    }
  return a;
}

DeformationBundle load_deformation(const std::filesystem::path& path) {
  json j = load_file(path);
  require_type(j, "deformation");
  DeformationBundle out{
      twisted_rbo_from_json(resolve_ref(require(j, "twisted_rbo"), path.parent_path()),
                            path.parent_path()),
      matrix_from_json(require(j, "frak_T")),
      std::nullopt,
      std::nullopt};
  if (j.contains("frak_T2")) out.frak_t2 = matrix_from_json(j["frak_T2"]);
  if (j.contains("X")) {
    const json& x = j["X"];
    out.x = std::make_pair(vec_from_json(require(x, "x")), vec_from_json(require(x, "y")));
  }
  return out;
}

void save(const std::filesystem::path& path, const json& j) {
  std::ofstream outfile(path);
  if (!outfile) throw Error(ErrorKind::parse, "cannot write " + path.string());
  outfile << j.dump(2) << "\n";
}

}  // namespace tlie::io
