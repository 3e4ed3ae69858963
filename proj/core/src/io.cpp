#include "flatdef/io.hpp"

#include <fstream>
#include <sstream>

namespace flatdef::io {

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t count_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0))
    throw InvalidInput(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

std::vector<std::string> string_list(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw InvalidInput(std::string("field '") + key + "' must be an array");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) throw InvalidInput(std::string("field '") + key + "' must contain strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("d" + std::to_string(i + 1));
  return out;
}

TPoly tpoly_from_json(const Json& j) {
  if (j.is_string()) {
    NcPoly p = parse_ncpoly(j.get<std::string>(), {});
    if (p.is_zero()) return {};
    return p.terms().begin()->second;
  }
  if (!j.is_array()) throw InvalidInput("polynomial entry must be a coefficient list or a string");
  std::vector<Scalar> cs;
  for (const auto& c : j) cs.push_back(scalar_from_json(c));
  return TPoly(std::move(cs));
}

Json to_json(const TPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(to_json(c));
  return arr;
}

}  // namespace

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  throw InvalidInput("scalar must be a string or an integer, got " + j.dump());
}

Json to_json(const Scalar& s) { return s.to_string(); }

Vector vector_from_json(const Json& j, std::size_t expected_len) {
  if (!j.is_array() || j.size() != expected_len)
    throw InvalidInput("expected a vector of " + std::to_string(expected_len) + " scalars");
  Vector v;
  for (const auto& e : j) v.push_back(scalar_from_json(e));
  return v;
}

StructureAlgebra algebra_from_json(const Json& j) {
  const std::size_t n = count_field(j, "dim");
  if (n == 0) throw InvalidInput("dim must be positive");
  std::vector<std::string> labels = j.contains("labels") ? string_list(j, "labels") : default_labels(n);
  if (labels.size() != n) throw InvalidInput("labels must have dim entries");
  const Json& t = field(j, "table");
  if (!t.is_array() || t.size() != n) throw InvalidInput("table must have dim rows");
  std::vector<Vector> table;
  for (const auto& row : t) {
    if (!row.is_array() || row.size() != n) throw InvalidInput("each table row must have dim entries");
    for (const auto& entry : row) table.push_back(vector_from_json(entry, n));
  }
  return StructureAlgebra(std::move(labels), std::move(table), vector_from_json(field(j, "unit"), n));
}

Json to_json(const StructureAlgebra& alg) {
  const std::size_t n = alg.dim();
  Json j;
  j["dim"] = n;
  j["labels"] = alg.labels();
  Json unit = Json::array();
  for (const auto& c : alg.unit()) unit.push_back(to_json(c));
  j["unit"] = unit;
  Json table = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < n; ++k) {
      Json entry = Json::array();
      for (const auto& c : alg.product(i, k)) entry.push_back(to_json(c));
      row.push_back(entry);
    }
    table.push_back(row);
  }
  j["table"] = table;
  return j;
}

Presentation presentation_from_json(const Json& j) {
  Presentation p;
  p.generators = string_list(j, "generators");
  for (const auto& r : string_list(j, "relations")) p.relations.push_back(parse_ncpoly(r, p.generators));
  p.expected_dim = count_field(j, "expected_dim");
  if (j.contains("max_degree") && !j.at("max_degree").is_null()) p.max_degree = count_field(j, "max_degree");
  p.check();
  return p;
}

std::variant<DeformationFamily, SampledFamily> family_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (kind == "relations") {
    SampledFamily f;
    f.generators = string_list(j, "generators");
    for (const auto& r : string_list(j, "relations")) f.relations.push_back(parse_ncpoly(r, f.generators));
    f.expected_dim = count_field(j, "expected_dim");
    if (j.contains("max_degree") && !j.at("max_degree").is_null()) f.max_degree = count_field(j, "max_degree");
    return f;
  }
  if (kind != "table") throw InvalidInput("family kind must be \"table\" or \"relations\"");
  DeformationFamily f;
  const std::size_t n = count_field(j, "dim");
  if (n == 0) throw InvalidInput("dim must be positive");
  f.labels = j.contains("labels") ? string_list(j, "labels") : default_labels(n);
  if (f.labels.size() != n) throw InvalidInput("labels must have dim entries");
  f.unit = vector_from_json(field(j, "unit"), n);
  const Json& t = field(j, "table");
  if (!t.is_array() || t.size() != n) throw InvalidInput("table must have dim rows");
  for (const auto& row : t) {
    if (!row.is_array() || row.size() != n) throw InvalidInput("each table row must have dim entries");
    for (const auto& entry : row) {
      if (!entry.is_array() || entry.size() != n) throw InvalidInput("each table entry must have dim polynomials");
      std::vector<TPoly> coords;
      for (const auto& p : entry) coords.push_back(tpoly_from_json(p));
      f.table.push_back(std::move(coords));
    }
  }
  return f;
}

Json to_json(const DeformationFamily& f) {
  const std::size_t n = f.dim();
  Json j;
  j["kind"] = "table";
  j["dim"] = n;
  j["labels"] = f.labels;
  Json unit = Json::array();
  for (const auto& c : f.unit) unit.push_back(to_json(c));
  j["unit"] = unit;
  Json table = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < n; ++k) {
      Json entry = Json::array();
      for (const auto& p : f.table[i * n + k]) entry.push_back(to_json(p));
      row.push_back(entry);
    }
    table.push_back(row);
  }
  j["table"] = table;
  return j;
}

Json to_json(const BlockProfile& p) {
  Json j = Json::object();
  for (auto [size, count] : p.counts()) j[std::to_string(size)] = count;
  return j;
}

BlockProfile profile_from_json(const Json& j) {
  if (j.is_string()) return BlockProfile::parse(j.get<std::string>());
  if (!j.is_object()) throw InvalidInput("profile must be an object or a string");
  std::map<std::size_t, std::size_t> counts;
  for (const auto& [k, v] : j.items()) {
    std::size_t size = 0;
    try {
      size = std::stoul(k);
    } catch (const std::exception&) {
      throw InvalidInput("profile key '" + k + "' is not a block size");
    }
    if (!v.is_number_integer() || v.get<long>() < 0) throw InvalidInput("profile counts must be non-negative integers");
    counts[size] = v.get<std::size_t>();
  }
  return BlockProfile(std::move(counts));
}

Json to_json(const FiltrationReport& f) {
  Json j;
  j["dims"] = f.dims;
  j["layer_dims"] = f.layer_dims;
  return j;
}

Json to_json(const ScanResult& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j;
    j["k"] = row.index;
    j["s"] = to_json(row.s);
    j["dim"] = row.dim;
    if (row.error) {
      j["error"] = *row.error;
    } else {
      j["semisimple"] = row.semisimple;
      j["radical_dim"] = row.radical_dim;
      j["profile"] = to_json(row.profile);
    }
    rows.push_back(j);
  }
  Json verdict;
  verdict["kind"] = to_string(r.verdict.kind);
  if (r.verdict.profile) verdict["profile"] = to_json(*r.verdict.profile);
  if (r.verdict.from_index) verdict["from_index"] = *r.verdict.from_index;
  Json j;
  j["rows"] = rows;
  j["verdict"] = verdict;
  return j;
}

Json to_json(const ObstructionReport& r) {
  Json targets = Json::array();
  for (const auto& row : r.targets) {
    Json t;
    t["profile"] = row.profile.to_string();
    t["bound"] = row.bound ? Json(*row.bound) : Json(nullptr);
    t["sampled"] = row.sampled;
    t["status"] = to_string(row.status);
    targets.push_back(t);
  }
  Json j;
  j["family"] = r.family.printed();
  j["dim_in_N"] = r.dim_in_N;
  j["targets"] = targets;
  return j;
}

}  // namespace flatdef::io
