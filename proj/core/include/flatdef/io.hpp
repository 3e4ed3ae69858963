#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>
#include <variant>

#include "flatdef/algebra.hpp"
#include "flatdef/deformation.hpp"
#include "flatdef/obstruction.hpp"
#include "flatdef/presentation.hpp"
#include "flatdef/structure.hpp"

namespace flatdef::io {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file; throws InvalidInput on I/O or syntax errors.
Json read_json_file(const std::filesystem::path& path);

/// Scalars are JSON strings in the text syntax ("3/4", "1/2+1*i"); plain
/// JSON integers are accepted on input.
Scalar scalar_from_json(const Json& j);
Json to_json(const Scalar& s);
Vector vector_from_json(const Json& j, std::size_t expected_len);

/// {"dim": n, "labels": [...], "unit": [...], "table": [[[...]]]}
StructureAlgebra algebra_from_json(const Json& j);
Json to_json(const StructureAlgebra& alg);

/// {"generators": [...], "relations": ["y^6 - x^3 - y^2*x", ...],
///  "expected_dim": 12, "max_degree": optional}
Presentation presentation_from_json(const Json& j);

/// {"kind": "table", ...} or {"kind": "relations", ...}; table entries are
/// coefficient lists [c0, c1, ...] or relation-grammar strings in t.
std::variant<DeformationFamily, SampledFamily> family_from_json(const Json& j);
Json to_json(const DeformationFamily& f);

/// {"1": a, "2": b, ...}
Json to_json(const BlockProfile& p);
BlockProfile profile_from_json(const Json& j);

Json to_json(const FiltrationReport& f);
Json to_json(const ScanResult& r);
Json to_json(const ObstructionReport& r);

}  // namespace flatdef::io
