#include "iip/json_io.hpp"

#include <fstream>

#include "iip/errors.hpp"

namespace iip {

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

const Json& require(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) {
    throw ParseError(path, "expected an object");
  }
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(at(path, key), "missing required field");
  }
  return *it;
}

std::size_t dimension_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() <= 0) {
    throw ParseError(path, "expected a positive integer dimension");
  }
  return j.get<std::size_t>();
}

std::vector<RatVector> vectors_from_json(const Json& j, std::size_t dim, const std::string& path) {
  if (!j.is_array()) {
    throw ParseError(path, "expected an array of vectors");
  }
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    RatVector v = vector_from_json(j[i], at(path, i));
    if (v.size() != dim) {
      throw ParseError(at(path, i), "expected length " + std::to_string(dim) + ", got " + std::to_string(v.size()));
    }
    out.push_back(std::move(v));
  }
  return out;
}

Json vectors_to_json(const std::vector<RatVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) {
    out.push_back(vector_to_json(v));
  }
  return out;
}

Weight weight_from_json(const Json& j, const std::string& path) {
  try {
    return Weight(matrix_from_json(j, path));
  } catch (const WeightError& e) {
    throw ParseError(path, e.what());
  }
}

Json check_to_json(const CheckResult& c) {
  Json out;
  out["name"] = c.name;
  out["statement"] = c.statement;
  out["logic"] = to_string(c.logic);
  out["hypothesis"] = c.hypothesis_side;
  out["conclusion"] = c.conclusion_side;
  out["guaranteed"] = c.guaranteed;
  out["holds"] = c.holds();
  Json ws = Json::array();
  for (const auto& w : c.witnesses) {
    ws.push_back({{"lhs", w.lhs}, {"rhs", w.rhs}, {"point", vector_to_json(w.point)}});
  }
  out["witnesses"] = std::move(ws);
  if (!c.derived_cones.empty()) {
    Json cones = Json::object();
    for (const auto& [name, k] : c.derived_cones) {
      cones[name] = cone_to_json(k);
    }
    out["cones"] = std::move(cones);
  }
  return out;
}

}  // namespace

Json rat_to_json(const Rat& x) { return to_string(x); }

Json vector_to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) {
    out.push_back(rat_to_json(x));
  }
  return out;
}

Json matrix_to_json(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out.push_back(vector_to_json(m.row(i)));
  }
  return out;
}

Json cone_to_json(const PolyCone& k) {
  Json out;
  out["ambient_dim"] = k.ambient_dim();
  out["generators"] = vectors_to_json(k.generators());
  out["inequalities"] = vectors_to_json(k.inequalities());
  return out;
}

Json imatrix_to_json(const IMatrix& a) {
  Json out;
  out["matrix"] = matrix_to_json(a.matrix());
  out["domain_weight"] = matrix_to_json(a.domain().w());
  out["codomain_weight"] = matrix_to_json(a.codomain().w());
  return out;
}

Json instance_to_json(const Instance& inst) {
  Json out;
  out["version"] = kSchemaVersion;
  out["label"] = inst.label();
  out["M"] = matrix_to_json(inst.m().matrix());
  out["N"] = matrix_to_json(inst.n().matrix());
  out["A"] = matrix_to_json(inst.a());
  out["K"] = cone_to_json(inst.k());
  return out;
}

Json report_to_json(const TheoremReport& r) {
  Json out;
  out["version"] = kSchemaVersion;
  out["label"] = r.label;
  out["verdict"] = {
      {"commutes", r.commutes},
      {"invariance", r.invariance},
      {"range_closed", r.range_closed},
      {"hypotheses_hold", r.hypotheses_hold()},
      {"cond_i", r.cond_i},
      {"cond_ii", r.cond_ii},
      {"cond_ii_strict", r.cond_ii_strict},
      {"cond_iii", r.cond_iii},
      {"cond_iii_span", r.cond_iii_span},
      {"equivalence_ok", r.equivalence_ok},
      {"theorem_falsified", r.theorem_falsified()},
      {"lemma_defect", r.lemma_defect()},
  };
  Json conds = Json::array();
  for (const auto& c : r.conditions) {
    conds.push_back(check_to_json(c));
  }
  out["conditions"] = std::move(conds);
  Json lemmas = Json::array();
  for (const auto& c : r.lemma_results) {
    lemmas.push_back(check_to_json(c));
  }
  out["lemmas"] = std::move(lemmas);
  Json cones = Json::object();
  for (const auto& [name, k] : r.cones) {
    cones[name] = cone_to_json(k);
  }
  out["cones"] = std::move(cones);
  Json mats = Json::object();
  for (const auto& [name, m] : r.matrices) {
    mats[name] = matrix_to_json(m);
  }
  out["matrices"] = std::move(mats);
  out["notes"] = r.notes;
  return out;
}

Rat rat_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rat(std::to_string(j.get<unsigned long long>())) : Rat(j.get<long>());
  }
  if (j.is_number_float()) {
    throw ParseError(path, "floating-point numbers are not exact; write \"p/q\" strings");
  }
  if (!j.is_string()) {
    throw ParseError(path, "expected a rational as a \"p/q\" string");
  }
  try {
    return parse_rat(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(path, e.what());
  }
}

RatVector vector_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) {
    throw ParseError(path, "expected an array of rationals");
  }
  RatVector v;
  v.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    v.push_back(rat_from_json(j[i], at(path, i)));
  }
  return v;
}

RatMatrix matrix_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) {
    throw ParseError(path, "expected a nonempty array of rows");
  }
  std::vector<RatVector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    rows.push_back(vector_from_json(j[i], at(path, i)));
    if (rows.back().empty()) {
      throw ParseError(at(path, i), "empty row");
    }
    if (rows.back().size() != rows.front().size()) {
      throw ParseError(at(path, i), "ragged matrix: row has " + std::to_string(rows.back().size()) +
                                        " entries, expected " + std::to_string(rows.front().size()));
    }
  }
  return RatMatrix::from_rows(rows, rows.front().size());
}

PolyCone cone_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) {
    throw ParseError(path, "expected a cone object");
  }
  if (j.contains("orthant")) {
    return PolyCone::orthant(dimension_from_json(j["orthant"], at(path, "orthant")));
  }
  const std::size_t dim = dimension_from_json(require(j, "ambient_dim", path), at(path, "ambient_dim"));
  const bool has_gens = j.contains("generators");
  const bool has_ineqs = j.contains("inequalities");
  if (!has_gens && !has_ineqs) {
    throw ParseError(path, "cone needs \"generators\", \"inequalities\" or \"orthant\"");
  }
  if (!has_gens) {
    return PolyCone::from_constraints(dim, vectors_from_json(j["inequalities"], dim, at(path, "inequalities")));
  }
  PolyCone k = PolyCone::from_generators(dim, vectors_from_json(j["generators"], dim, at(path, "generators")));
  if (has_ineqs) {
    const PolyCone h =
        PolyCone::from_constraints(dim, vectors_from_json(j["inequalities"], dim, at(path, "inequalities")));
    if (!cone_equal(k, h)) {
      throw ParseError(at(path, "inequalities"), "inequalities describe a different cone than the generators");
    }
  }
  return k;
}

IMatrix imatrix_from_json(const Json& j, const std::string& path) {
  RatMatrix a = matrix_from_json(require(j, "matrix", path), at(path, "matrix"));
  Weight dom = j.contains("domain_weight") ? weight_from_json(j["domain_weight"], at(path, "domain_weight"))
                                           : Weight::identity(a.cols());
  Weight cod = j.contains("codomain_weight") ? weight_from_json(j["codomain_weight"], at(path, "codomain_weight"))
                                             : Weight::identity(a.rows());
  try {
    return IMatrix(std::move(a), IndefiniteSpace(std::move(dom)), IndefiniteSpace(std::move(cod)));
  } catch (const DimensionError& e) {
    throw ParseError(path, e.what());
  }
}

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) {
    throw ParseError("", "expected an instance object");
  }
  if (j.contains("version") && j["version"] != kSchemaVersion) {
    throw ParseError("/version", "unsupported schema version (expected \"v1\")");
  }
  std::string label = "instance";
  if (j.contains("label")) {
    if (!j["label"].is_string()) {
      throw ParseError("/label", "expected a string");
    }
    label = j["label"].get<std::string>();
  }
  RatMatrix a = matrix_from_json(require(j, "A", ""), "/A");
  Weight m = j.contains("M") ? weight_from_json(j["M"], "/M") : Weight::identity(a.rows());
  Weight n = j.contains("N") ? weight_from_json(j["N"], "/N") : Weight::identity(a.cols());
  PolyCone k = j.contains("K") ? cone_from_json(j["K"], "/K") : PolyCone::orthant(a.cols());
  if (m.dim() != a.rows()) {
    throw ParseError("/M", "M is " + std::to_string(m.dim()) + "x" + std::to_string(m.dim()) + " but A has " +
                               std::to_string(a.rows()) + " rows");
  }
  if (n.dim() != a.cols()) {
    throw ParseError("/N", "N is " + std::to_string(n.dim()) + "x" + std::to_string(n.dim()) + " but A has " +
                               std::to_string(a.cols()) + " columns");
  }
  if (k.ambient_dim() != a.cols()) {
    throw ParseError("/K", "K lives in R^" + std::to_string(k.ambient_dim()) + " but A has " +
                               std::to_string(a.cols()) + " columns");
  }
  return Instance(std::move(label), std::move(m), std::move(n), std::move(a), std::move(k));
}

Json read_json_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw ParseError("", "cannot open " + file.string());
  }
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("", file.string() + ": " + e.what());
  }
}

Instance read_instance(const std::filesystem::path& file) { return instance_from_json(read_json_file(file)); }

void write_json_file(const std::filesystem::path& file, const Json& j) {
  std::ofstream out(file);
  if (!out) {
    throw std::runtime_error("cannot write " + file.string());
  }
  out << j.dump(2) << '\n';
}

}  // namespace iip
