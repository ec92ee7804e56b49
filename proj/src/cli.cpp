#include "mrsk/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mrsk/appendix.hpp"
#include "mrsk/error.hpp"
#include "mrsk/json_io.hpp"
#include "mrsk/rsk.hpp"
#include "mrsk/standardize.hpp"
#include "mrsk/verify.hpp"

namespace mrsk::cli {

namespace {

struct Globals {
  gf::Residue p = gf::kDefaultPrime;
  std::optional<std::uint64_t> seed;
  bool json = false;
  bool pretty = false;
  int workers = 1;
  double threshold = 0.98;
  std::string fixture_dir;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_ints(const std::string& s, const char* what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError(std::string(what) + ": expected comma-separated integers, got '" + s + "'");
    }
  }
  return out;
}

Composition parse_composition(const std::string& s, const char* what) { return Composition(parse_ints(s, what)); }

// A JSON argument is either inline JSON or a path to a file.
Json load_json_arg(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first != std::string::npos && (s[first] == '[' || s[first] == '{')) {
    try {
      return Json::parse(s);
    } catch (const Json::parse_error& e) {
      throw Error(std::string("inline JSON: ") + e.what());
    }
  }
  return read_json_file(s);
}

std::filesystem::path resolve_fixture(const Globals& g, const std::string& name) {
  std::filesystem::path direct(name);
  if (direct.extension() == ".json" && std::filesystem::exists(direct)) return direct;
  const auto dir = g.fixture_dir.empty() ? default_fixture_dir() : std::filesystem::path(g.fixture_dir);
  return dir / (name + ".json");
}

void emit(std::ostream& out, const Globals& g, const Json& j) { out << j.dump(g.pretty ? 2 : -1) << "\n"; }

bool want_json(const Globals& g) { return g.json || g.pretty; }

std::string join(const std::vector<int>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

void print_tableau(std::ostream& out, const std::string& label, const Tableau& t) {
  out << label << ":\n";
  if (t.empty()) out << "(empty)\n";
  else out << t.to_text();
}

void print_output(std::ostream& out, const MirabolicOutput& o) {
  out << "lambda = " << o.lambda.to_string() << "\n"
      << "theta = " << o.theta.to_string() << "\n"
      << "lambda' = " << o.lambda_prime.to_string() << "\n";
  print_tableau(out, "T", o.t);
  print_tableau(out, "T'", o.t_prime);
}

void print_trace(std::ostream& out, const DecoratedArray& da, const MirabolicTrace& tr) {
  out << "u = " << join(da.omega.u) << "\n"
      << "w = " << join(da.omega.w) << "\n"
      << "beta = " << to_string(da.beta) << "\n"
      << "R = " << join(tr.initial_reserve) << "\n";
  for (const auto& s : tr.steps) {
    out << "\ni = " << s.index << (s.decorated ? " (in beta)" : "") << ", insert " << s.inserted << "\n"
        << "R = " << join(s.reserve) << "\n";
    print_tableau(out, "T_" + std::to_string(s.index), s.t);
    print_tableau(out, "T'_" + std::to_string(s.index), s.t_prime);
  }
  out << "\n";
  print_tableau(out, "T_" + std::to_string(2 * da.omega.size()), tr.t_full);
  out << "nu = " << tr.nu.to_string() << "\n\n";
  print_output(out, tr.output);
}

int finish_report(std::ostream& out, std::ostream& err, const Globals& g, const VerificationReport& rep,
                  double threshold) {
  emit(out, g, to_json(rep));
  if (rep.total == 0) {
    err << "error: no samples drawn" << (rep.counters.count("empty_stratum") ? " (empty variety stratum)" : "") << "\n";
    return kDomainError;
  }
  return rep.rate() >= threshold ? kOk : kThresholdFailure;
}

std::uint64_t require_seed(const Globals& g, const char* verb) {
  if (!g.seed) throw UsageError(std::string(verb) + ": --seed is required");
  return *g.seed;
}

void check_d(int d, int size, const char* what) {
  if (d >= 0 && d != size)
    throw Error(std::string(what) + " has size " + std::to_string(size) + " but --d is " + std::to_string(d));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Variant and mirabolic RSK with a finite-field flag oracle", "mrsk"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  std::uint64_t seed_value = 0;
  app.add_option("--p", g.p, "prime for the finite field")->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option("--seed", seed_value, "seed for randomized commands");
  app.add_flag("--json", g.json, "JSON output");
  app.add_flag("--pretty", g.pretty, "indented JSON output");
  app.add_option("--workers", g.workers, "worker threads for verification")->check(CLI::PositiveNumber);
  app.add_option("--threshold", g.threshold, "minimum match rate for verify")->check(CLI::Range(0.0, 1.0));
  app.add_option("--fixture-dir", g.fixture_dir, "directory holding fixture files");

  // rsk
  auto* rsk = app.add_subcommand("rsk", "variant RSK")->require_subcommand(1);
  std::string array_arg, p_arg, q_arg;
  auto* rsk_fwd = rsk->add_subcommand("forward", "array or matrix -> (P, Q)");
  rsk_fwd->add_option("--array", array_arg, "array {u,w} or matrix grid (file or inline JSON)")->required();
  auto* rsk_inv = rsk->add_subcommand("inverse", "(P, Q) -> array");
  rsk_inv->add_option("--p", p_arg, "insertion tableau (file or inline JSON)")->required();
  rsk_inv->add_option("--q", q_arg, "recording tableau (file or inline JSON)")->required();

  // std
  auto* stdz = app.add_subcommand("std", "standardization")->require_subcommand(1);
  bool classical = false;
  std::string tableau_arg, mu_arg, nu_arg;
  auto* std_tab = stdz->add_subcommand("tableau", "standardize a tableau");
  std_tab->add_option("--tableau", tableau_arg, "tableau (file or inline JSON)")->required();
  std_tab->add_flag("--classical", classical, "left-to-right numbering");
  auto* std_arr = stdz->add_subcommand("array", "standardize an array");
  std_arr->add_option("--array", array_arg, "array or matrix (file or inline JSON)")->required();
  std_arr->add_flag("--classical", classical, "increasing numbering on a lexicographic array");
  auto* std_inv = stdz->add_subcommand("inverse", "undo array standardization");
  std_inv->add_option("--array", array_arg, "standardized array (file or inline JSON)")->required();
  std_inv->add_option("--mu", mu_arg, "content of the bottom row, e.g. 2,1")->required();
  std_inv->add_option("--nu", nu_arg, "content of the top row")->required();

  // mirabolic
  auto* mir = app.add_subcommand("mirabolic", "mirabolic RSK")->require_subcommand(1);
  std::string beta_arg, fixture_arg;
  auto* mir_run = mir->add_subcommand("run", "run on a decorated array and print the trace");
  auto* mir_array = mir_run->add_option("--array", array_arg, "array or matrix (file or inline JSON)");
  mir_run->add_option("--beta", beta_arg, "decorated columns, e.g. 4,7");
  auto* mir_fixture = mir_run->add_option("--fixture", fixture_arg, "fixture name, e.g. appendix-a");
  mir_array->excludes(mir_fixture);
  int d = -1;
  auto* mir_rt = mir->add_subcommand("roundtrip", "exhaustive bijectivity check");
  mir_rt->add_option("--d", d, "size")->required()->check(CLI::Range(1, 5));

  // verify
  auto* ver = app.add_subcommand("verify", "statistical geometry checks")->require_subcommand(1);
  std::string lambda_arg, mu_prime_arg;
  int samples = 500;
  double v_zero = 0.1;
  auto* ver_rosso = ver->add_subcommand("rosso", "relative position of x-stable flags vs rsk_inverse");
  ver_rosso->add_option("--d", d, "size (checked against the compositions)");
  ver_rosso->add_option("--lambda", lambda_arg, "Jordan type of x")->required();
  ver_rosso->add_option("--mu", mu_arg, "type of F")->required();
  ver_rosso->add_option("--nu", nu_arg, "type of F'")->required();
  ver_rosso->add_option("--samples", samples)->check(CLI::PositiveNumber);
  auto* ver_thm2 = ver->add_subcommand("thm2", "conormal Jordan data vs mirabolic RSK");
  ver_thm2->add_option("--d", d, "size (checked against the compositions)");
  ver_thm2->add_option("--mu", mu_arg, "type of F")->required();
  ver_thm2->add_option("--mu-prime", mu_prime_arg, "type of F'")->required();
  ver_thm2->add_option("--samples", samples)->check(CLI::PositiveNumber);
  ver_thm2->add_option("--v-zero", v_zero, "probability of sampling v = 0")->check(CLI::Range(0.0, 1.0));
  auto* ver_app = ver->add_subcommand("appendix-a", "deterministic check of the 7-dimensional example");

  // enumerate
  auto* en = app.add_subcommand("enumerate", "list combinatorial objects")->require_subcommand(1);
  std::string shape_arg;
  auto* en_ss = en->add_subcommand("semistandard", "column-semistandard tableaux");
  en_ss->add_option("--shape", shape_arg, "partition")->required();
  en_ss->add_option("--content", mu_arg, "composition")->required();
  auto* en_mat = en->add_subcommand("matrices", "matrices with given margins");
  en_mat->add_option("--mu", mu_arg, "row sums")->required();
  en_mat->add_option("--nu", nu_arg, "column sums")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }
  if (seed_opt->count() > 0) g.seed = seed_value;

  try {
    if (*rsk_fwd) {
      const auto pair = rsk_forward(array_or_matrix_from_json(load_json_arg(array_arg)));
      if (want_json(g)) {
        emit(out, g, Json{{"P", to_json(pair.p)}, {"Q", to_json(pair.q)}});
      } else {
        print_tableau(out, "P", pair.p);
        print_tableau(out, "Q", pair.q);
      }
    } else if (*rsk_inv) {
      const auto a = rsk_inverse(tableau_from_json(load_json_arg(p_arg)), tableau_from_json(load_json_arg(q_arg)));
      if (want_json(g)) emit(out, g, to_json(a));
      else out << "u = " << join(a.u) << "\nw = " << join(a.w) << "\n";
    } else if (*std_tab) {
      const auto t = std_tableau(tableau_from_json(load_json_arg(tableau_arg)),
                                 classical ? StdConvention::Classical : StdConvention::Variant);
      if (want_json(g)) emit(out, g, to_json(t));
      else out << t.to_text();
    } else if (*std_arr) {
      const auto j = load_json_arg(array_arg);
      TwoRowArray a = array_or_matrix_from_json(j);
      if (classical) a = to_lexicographic(a);
      const auto s = std_array(a, classical ? StdConvention::Classical : StdConvention::Variant);
      if (want_json(g)) emit(out, g, to_json(s));
      else out << "u = " << join(s.u) << "\nw = " << join(s.w) << "\n";
    } else if (*std_inv) {
      const auto a = std_inverse(array_from_json(load_json_arg(array_arg)), parse_composition(mu_arg, "--mu"),
                                 parse_composition(nu_arg, "--nu"));
      if (want_json(g)) emit(out, g, to_json(a));
      else out << "u = " << join(a.u) << "\nw = " << join(a.w) << "\n";
    } else if (*mir_run) {
      DecoratedArray da;
      if (!fixture_arg.empty()) {
        da = load_appendix_fixture(resolve_fixture(g, fixture_arg), g.p).input;
      } else if (!array_arg.empty()) {
        da.omega = array_or_matrix_from_json(load_json_arg(array_arg));
        if (!beta_arg.empty())
          for (int b : parse_ints(beta_arg, "--beta")) da.beta.insert(b);
      } else {
        throw UsageError("mirabolic run: one of --array or --fixture is required");
      }
      const auto tr = mirabolic_rsk_traced(da);
      if (want_json(g)) emit(out, g, to_json(tr));
      else print_trace(out, da, tr);
    } else if (*mir_rt) {
      return finish_report(out, err, g, verify_mirabolic_bijection(d), 1.0);
    } else if (*ver_rosso) {
      RossoConfig cfg{Partition(parse_ints(lambda_arg, "--lambda")), parse_composition(mu_arg, "--mu"),
                      parse_composition(nu_arg, "--nu"), g.p, samples, require_seed(g, "verify rosso"), g.workers};
      check_d(d, cfg.lambda.size(), "--lambda");
      check_d(cfg.lambda.size(), cfg.mu.size(), "--mu");
      check_d(cfg.lambda.size(), cfg.nu.size(), "--nu");
      return finish_report(out, err, g, verify_rosso(cfg), g.threshold);
    } else if (*ver_thm2) {
      Thm2Config cfg{parse_composition(mu_arg, "--mu"), parse_composition(mu_prime_arg, "--mu-prime"), g.p,
                     samples, require_seed(g, "verify thm2"), v_zero, g.workers};
      check_d(d, cfg.mu.size(), "--mu");
      check_d(cfg.mu.size(), cfg.mu_prime.size(), "--mu-prime");
      return finish_report(out, err, g, verify_thm2(cfg), g.threshold);
    } else if (*ver_app) {
      return finish_report(out, err, g, check_appendix(load_appendix_fixture(resolve_fixture(g, "appendix-a"), g.p)), 1.0);
    } else if (*en_ss) {
      const auto ts = enumerate_semistandard(Partition(parse_ints(shape_arg, "--shape")),
                                             parse_composition(mu_arg, "--content"));
      if (want_json(g)) {
        Json j = Json::array();
        for (const auto& t : ts) j.push_back(to_json(t));
        emit(out, g, j);
      } else {
        for (std::size_t i = 0; i < ts.size(); ++i) out << (i ? "\n" : "") << ts[i].to_text();
      }
    } else if (*en_mat) {
      const auto ms = enumerate_margin_matrices(parse_composition(mu_arg, "--mu"), parse_composition(nu_arg, "--nu"));
      if (want_json(g)) {
        Json j = Json::array();
        for (const auto& m : ms) j.push_back(to_json(m));
        emit(out, g, j);
      } else {
        for (std::size_t i = 0; i < ms.size(); ++i) {
          out << (i ? "\n" : "");
          for (const auto& row : ms[i].entries()) out << join(row) << "\n";
        }
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kOk;
}

}  // namespace mrsk::cli
