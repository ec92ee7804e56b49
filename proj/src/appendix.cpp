#include "mrsk/appendix.hpp"

#include "mrsk/error.hpp"

namespace mrsk {

namespace {

gf::MatrixGF matrix_gf(const gf::PrimeField& field, const Json& j) {
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& r : int_grid(j, "matrix")) rows.emplace_back(r.begin(), r.end());
  return gf::MatrixGF::from_ints(field, rows);
}

gf::Vector vector_gf(const gf::PrimeField& field, const Json& j) {
  gf::Vector v;
  for (int e : int_list(j, "vector")) v.push_back(field.from_int(e));
  return v;
}

FlagGF flag_gf(const gf::PrimeField& field, std::size_t d, const Json& j) {
  std::vector<std::vector<gf::Vector>> gens;
  for (const auto& step : j) {
    auto& g = gens.emplace_back();
    for (const auto& v : step) g.push_back(vector_gf(field, v));
  }
  return FlagGF::from_generators(field, d, gens);
}

}  // namespace

AppendixFixture load_appendix_fixture(const std::filesystem::path& path, gf::Residue p) {
  const auto j = read_json_file(path);
  const gf::PrimeField field(p);
  const auto d = j.at("d").get<std::size_t>();
  const auto beta = int_list(j.at("beta"), "beta");

  std::vector<MirabolicStep> trace;
  for (const auto& s : j.at("trace")) {
    MirabolicStep step;
    step.index = s.at("index").get<int>();
    step.decorated = s.at("decorated").get<bool>();
    step.reserve = int_list(s.at("R"), "R");
    step.t = tableau_from_json(s.at("T"));
    step.t_prime = tableau_from_json(s.at("TPrime"));
    trace.push_back(std::move(step));
  }

  return AppendixFixture{field,
                         matrix_gf(field, j.at("x")),
                         matrix_gf(field, j.at("xPrime")),
                         flag_gf(field, d, j.at("F")),
                         flag_gf(field, d, j.at("FPrime")),
                         vector_gf(field, j.at("v")),
                         vector_gf(field, j.at("vStar")),
                         DecoratedArray{array_from_json(j.at("omega")), std::set<int>(beta.begin(), beta.end())},
                         matrix_from_json(j.at("matrix")),
                         mirabolic_output_from_json(j.at("expected")),
                         int_list(j.at("initialR"), "initialR"),
                         std::move(trace),
                         tableau_from_json(j.at("final").at("T2d")),
                         Partition(int_list(j.at("final").at("nu"), "nu"))};
}

bool trace_matches(const MirabolicTrace& trace, const AppendixFixture& fx) {
  if (trace.initial_reserve != fx.initial_reserve || trace.steps.size() != fx.trace.size()) return false;
  for (std::size_t i = 0; i < fx.trace.size(); ++i) {
    const auto& got = trace.steps[i];
    const auto& want = fx.trace[i];
    if (got.index != want.index || got.decorated != want.decorated || got.reserve != want.reserve ||
        got.t != want.t || got.t_prime != want.t_prime)
      return false;
  }
  return trace.t_full == fx.t_full && trace.nu == fx.nu;
}

VerificationReport check_appendix(const AppendixFixture& fx) {
  VerificationReport rep;
  rep.kind = "appendix-a";

  const auto traced = mirabolic_rsk_traced(fx.input);
  rep.record("mirabolic_rsk", traced.output == fx.expected);
  rep.record("trace", trace_matches(traced, fx));

  const auto rp = relative_position(fx.f, fx.f_prime);
  rep.record("relative_position", rp == fx.matrix && matrix_to_array(rp) == fx.input.omega);
  rep.record("beta", beta_of_triple(fx.f, fx.f_prime, fx.v) == fx.input.beta);

  const ConormalVector c{fx.x, fx.x_prime, fx.v_star};
  rep.record("conormal", is_conormal(c, fx.f, fx.f_prime, fx.v));

  const auto geo = mirabolic_type_of_conormal(c, fx.f, fx.f_prime, fx.v);
  rep.record("lambda", geo.lambda == fx.expected.lambda);
  rep.record("theta", geo.theta == fx.expected.theta);
  rep.record("lambda_prime", geo.lambda_prime == fx.expected.lambda_prime);
  rep.record("T", geo.t == fx.expected.t);
  rep.record("T_prime", geo.t_prime == fx.expected.t_prime);
  rep.record("geometry_vs_algorithm", geo == traced.output);
  return rep;
}

}  // namespace mrsk
