#include "mrsk/json_io.hpp"

#include <fstream>

#include "mrsk/error.hpp"

#ifndef MRSK_FIXTURE_DIR
#define MRSK_FIXTURE_DIR "fixtures"
#endif

namespace mrsk {

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(std::string(what) + ": expected an array of integers");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw Error(std::string(what) + ": expected an array of integers");
    out.push_back(e.get<int>());
  }
  return out;
}

std::vector<std::vector<int>> int_grid(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(std::string(what) + ": expected an array of arrays");
  std::vector<std::vector<int>> out;
  for (const auto& row : j) out.push_back(int_list(row, what));
  return out;
}

Json to_json(const Tableau& t) { return Json(t.rows()); }

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const TwoRowArray& a) { return Json{{"u", a.u}, {"w", a.w}}; }

Json to_json(const MarginMatrix& m) { return Json(m.entries()); }

Json to_json(const MirabolicOutput& out) {
  return Json{{"lambda", to_json(out.lambda)},
              {"theta", to_json(out.theta)},
              {"lambdaPrime", to_json(out.lambda_prime)},
              {"T", to_json(out.t)},
              {"TPrime", to_json(out.t_prime)}};
}

Json to_json(const MirabolicTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"index", s.index},
                     {"decorated", s.decorated},
                     {"inserted", s.inserted},
                     {"R", s.reserve},
                     {"T", to_json(s.t)},
                     {"TPrime", to_json(s.t_prime)}});
  }
  return Json{{"initialR", trace.initial_reserve},
              {"trace", steps},
              {"final", {{"T2d", to_json(trace.t_full)}, {"nu", to_json(trace.nu)}}},
              {"output", to_json(trace.output)}};
}

Json to_json(const VerificationReport& rep) {
  Json buckets = Json::object();
  for (const auto& [key, b] : rep.buckets) buckets[key] = {{"matches", b.matches}, {"total", b.total}};
  Json counters = Json::object();
  for (const auto& [key, v] : rep.counters) counters[key] = v;
  return Json{{"kind", rep.kind},    {"buckets", buckets},  {"matches", rep.matches},
              {"total", rep.total},  {"rate", rep.rate()},  {"counters", counters}};
}

Tableau tableau_from_json(const Json& j) { return Tableau(int_grid(j, "tableau")); }

TwoRowArray array_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("u") || !j.contains("w")) throw Error("array: expected {\"u\": [...], \"w\": [...]}");
  TwoRowArray a{int_list(j.at("u"), "array.u"), int_list(j.at("w"), "array.w")};
  if (a.u.size() != a.w.size()) throw ShapeError("array: rows u and w differ in length");
  return a;
}

MarginMatrix matrix_from_json(const Json& j) { return MarginMatrix(int_grid(j, "matrix")); }

MirabolicOutput mirabolic_output_from_json(const Json& j) {
  return MirabolicOutput{Partition(int_list(j.at("lambda"), "lambda")), Partition(int_list(j.at("theta"), "theta")),
                         Partition(int_list(j.at("lambdaPrime"), "lambdaPrime")), tableau_from_json(j.at("T")),
                         tableau_from_json(j.at("TPrime"))};
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport rep;
  rep.kind = j.at("kind").get<std::string>();
  for (const auto& [key, b] : j.at("buckets").items())
    rep.buckets[key] = BucketCount{b.at("matches").get<long>(), b.at("total").get<long>()};
  if (j.contains("counters"))
    for (const auto& [key, v] : j.at("counters").items()) rep.counters[key] = v.get<long>();
  rep.matches = j.at("matches").get<long>();
  rep.total = j.at("total").get<long>();
  return rep;
}

TwoRowArray array_or_matrix_from_json(const Json& j) {
  if (j.is_object()) {
    const auto a = array_from_json(j);
    return reorder_to_paper(a.u, a.w);
  }
  return matrix_to_array(matrix_from_json(j));
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

std::filesystem::path default_fixture_dir() { return MRSK_FIXTURE_DIR; }

}  // namespace mrsk
