#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "iip/verifier.hpp"

namespace iip {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "v1";

// Rationals travel as "p/q" strings ("p" when q = 1). Integers are accepted on
// input; floats never are. Every parser throws ParseError carrying a JSON
// pointer to the offending value.
Json rat_to_json(const Rat& x);
Json vector_to_json(const RatVector& v);
Json matrix_to_json(const RatMatrix& m);
Json cone_to_json(const PolyCone& k);
Json imatrix_to_json(const IMatrix& a);
Json instance_to_json(const Instance& inst);
Json report_to_json(const TheoremReport& r);

Rat rat_from_json(const Json& j, const std::string& path = "");
RatVector vector_from_json(const Json& j, const std::string& path = "");
RatMatrix matrix_from_json(const Json& j, const std::string& path = "");
PolyCone cone_from_json(const Json& j, const std::string& path = "");
IMatrix imatrix_from_json(const Json& j, const std::string& path = "");
// M and N default to identities and K to the nonnegative orthant.
Instance instance_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& file);
Instance read_instance(const std::filesystem::path& file);
void write_json_file(const std::filesystem::path& file, const Json& j);

}  // namespace iip
