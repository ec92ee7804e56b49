#pragma once

// JSON encodings used by the CLI and fixtures.
//   tableau        [[1,2,3],[1,3]]
//   array          {"u": [...], "w": [...]}
//   matrix         [[0,1,1],[1,0,1]]   (row-major)
//   mirabolic      {"lambda", "theta", "lambdaPrime", "T", "TPrime"}
//   report         {"kind", "buckets": {key: {"matches","total"}}, "matches", "total", "rate"}

#include <filesystem>
#include <set>
#include <string>

#include <json.hpp>

#include "mrsk/arrays.hpp"
#include "mrsk/combinat.hpp"
#include "mrsk/mirabolic.hpp"
#include "mrsk/verify.hpp"

namespace mrsk {

using Json = nlohmann::ordered_json;

Json to_json(const Tableau& t);
Json to_json(const Partition& p);
Json to_json(const TwoRowArray& a);
Json to_json(const MarginMatrix& m);
Json to_json(const MirabolicOutput& out);
Json to_json(const MirabolicTrace& trace);
Json to_json(const VerificationReport& rep);

Tableau tableau_from_json(const Json& j);
TwoRowArray array_from_json(const Json& j);
MarginMatrix matrix_from_json(const Json& j);
MirabolicOutput mirabolic_output_from_json(const Json& j);
VerificationReport report_from_json(const Json& j);

/// Accepts either an {"u","w"} object (reordered into canonical order) or a
/// row-major matrix grid.
TwoRowArray array_or_matrix_from_json(const Json& j);

std::vector<int> int_list(const Json& j, const char* what);
std::vector<std::vector<int>> int_grid(const Json& j, const char* what);

Json read_json_file(const std::filesystem::path& path);

/// Directory containing the shipped fixtures (compile-time default).
std::filesystem::path default_fixture_dir();

}  // namespace mrsk
