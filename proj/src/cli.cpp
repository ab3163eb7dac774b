#include "totpos/cli.hpp"

#include "totpos/harness.hpp"
#include "totpos/io.hpp"
#include "totpos/oracle.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <sstream>

namespace totpos {

namespace {

using io::json;

struct Options {
  std::string input;
  std::string format = "json";
  bool json_output = false;

  std::string spec;
  std::string table;
  std::string diag;
  std::string test;
  std::string oracle;
  std::string reference;
  std::string second_reference;
  std::string eps = "1/1000";
  std::string mutant = "none";

  int trials = 100;
  int dim = 0;
  std::uint64_t seed = 42;
  bool strict = false;
  bool factorization = false;
  bool generators = false;

  std::vector<int> dims{2, 3, 4, 5};
  int cap = kDefaultDimensionCap;
  bool serial = false;
  bool timing = false;
};

/// Negative outcomes that are not exceptions (a failed verification, a matrix outside
/// the centralizer) return kExitNegative; exceptions are mapped in run_cli.
using Handler = int (*)(const Options&, std::ostream&);

std::string read_source(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  return io::read_file(path);
}

json read_json(const std::string& path) { return json::parse(read_source(path)); }

RatMatrix read_matrix(const std::string& path, const std::string& format) {
  if (format == "csv") return io::matrix_from_csv(read_source(path));
  return io::matrix_from_json(read_json(path));
}

RatMatrix input_matrix(const Options& o) {
  if (o.input.empty()) throw std::invalid_argument("--input is required");
  return read_matrix(o.input, o.format);
}

AutomorphismSpec input_spec(const Options& o) {
  if (o.spec.empty()) throw std::invalid_argument("--spec is required");
  return io::spec_from_json(read_json(o.spec));
}

std::uint64_t effective_seed(std::uint64_t seed) {
  if (const char* env = std::getenv("TOTPOS_SEED"); env && *env) {
    std::size_t used = 0;
    const std::string text(env);
    const unsigned long long value = std::stoull(text, &used, 10);
    if (used != text.size()) throw std::invalid_argument("TOTPOS_SEED is not an unsigned integer");
    return value;
  }
  return seed;
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// -- subcommands ---------------------------------------------------------------

int cmd_classify(const Options& o, std::ostream& out) {
  const auto cert = classify_full(input_matrix(o));
  if (o.json_output) {
    print(out, io::to_json(cert));
  } else {
    out << to_string(cert.label) << '\n';
    if (cert.witness) {
      const json idx = io::to_json(cert.witness->index);
      out << "witness: rows " << idx["alpha"].dump() << " cols " << idx["beta"].dump()
          << " minor " << to_string(cert.witness->value) << '\n';
    }
  }
  return cert.label == ClassLabel::NOT_TN ? kExitNegative : kExitOk;
}

int cmd_factorize(const Options& o, std::ostream& out) {
  print(out, io::to_json(factorize(input_matrix(o))));
  return kExitOk;
}

int cmd_synthesize(const Options& o, std::ostream& out) {
  if (o.input.empty()) throw std::invalid_argument("--input is required");
  print(out, io::to_json(synthesize(io::factorization_from_json(read_json(o.input)))));
  return kExitOk;
}

int cmd_ldu(const Options& o, std::ostream& out) {
  const auto parts = ldu(input_matrix(o));
  print(out, {{"L", io::to_json(parts.l)}, {"D", io::to_json(parts.d)}, {"U", io::to_json(parts.u)}});
  return kExitOk;
}

int cmd_apply(const Options& o, std::ostream& out) {
  const auto spec = input_spec(o);
  if (o.generators) {
    print(out, io::to_json(tabulate(spec)));
    return kExitOk;
  }
  print(out, io::to_json(apply(spec, input_matrix(o))));
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto spec = input_spec(o);
  if (o.dim != 0 && o.dim != spec.n)
    throw std::invalid_argument("--dim " + std::to_string(o.dim) + " does not match spec n = " +
                                std::to_string(spec.n));
  const auto report = verify_homomorphism(spec, o.trials, effective_seed(o.seed));
  if (o.json_output) {
    json j{{"pass", report.pass}, {"trials", report.trials_run}};
    if (report.counterexample) j["counterexample"] = io::to_json(*report.counterexample);
    print(out, j);
  } else {
    out << (report.pass ? "PASS" : "FAIL") << " homomorphism n=" << spec.n
        << " trials=" << report.trials_run << '\n';
    if (report.counterexample) out << "counterexample: " << io::to_json(*report.counterexample).dump() << '\n';
  }
  return report.pass ? kExitOk : kExitNegative;
}

int cmd_recover(const Options& o, std::ostream& out) {
  const std::string& path = o.table.empty() ? o.input : o.table;
  if (path.empty()) throw std::invalid_argument("--table is required");
  print(out, io::to_json(recover(io::table_from_json(read_json(path)))));
  return kExitOk;
}

RatMatrix read_diagonal(const std::string& path) {
  const json j = read_json(path);
  if (j.is_array()) {
    RatVector d(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) d(static_cast<Eigen::Index>(i)) = io::rat_from_json(j[i]);
    return diagonal(d);
  }
  return io::matrix_from_json(j);
}

int cmd_centralizer(const Options& o, std::ostream& out) {
  if (o.diag.empty()) throw std::invalid_argument("--diag is required");
  const RatMatrix d = read_diagonal(o.diag);
  const auto shape = centralizer_shape(d);
  std::optional<bool> member;
  if (!o.test.empty()) {
    const RatMatrix x = read_matrix(o.test, o.format);
    if (x.rows() != d.rows() || x.cols() != d.cols())
      throw std::invalid_argument("--test matrix does not match the diagonal's dimension");
    member = block_membership(d, x);
  }
  if (o.json_output) {
    json j = io::to_json(shape);
    if (member) j["member"] = *member;
    print(out, j);
  } else {
    out << "composition:";
    for (int s : shape.composition) out << ' ' << s;
    out << '\n';
    if (member) out << (*member ? "member" : "not a member") << '\n';
  }
  return member.value_or(true) ? kExitOk : kExitNegative;
}

int cmd_perturb(const Options& o, std::ostream& out) {
  const RatMatrix a = input_matrix(o);
  const Rat eps = parse_rat(o.eps);
  if (eps <= 0) throw std::invalid_argument("--eps must be positive");
  const RatMatrix b = whitney_perturb(a, eps);
  print(out, {{"matrix", io::to_json(b)}, {"distance", io::to_json(max_entry_distance(a, b))}});
  return kExitOk;
}

int cmd_extend(const Options& o, std::ostream& out) {
  MatrixMap oracle;
  if (!o.oracle.empty()) oracle = subprocess_oracle(o.oracle);
  else if (!o.spec.empty()) oracle = as_map(input_spec(o));
  else throw std::invalid_argument("one of --oracle or --spec is required");
  if (o.reference.empty()) throw std::invalid_argument("--reference is required");
  const RatMatrix reference = read_matrix(o.reference, o.format);
  const RatMatrix x = input_matrix(o);
  const ScaledMatrix result = extend_tp_automorphism(oracle, reference, x);
  json j{{"result", io::to_json(result)}};
  int code = kExitOk;
  if (!o.second_reference.empty()) {
    const ScaledMatrix other =
        extend_tp_automorphism(oracle, read_matrix(o.second_reference, o.format), x);
    j["reference_independent"] = other == result;
    if (!(other == result)) code = kExitNegative;
  }
  print(out, j);
  return code;
}

int cmd_random(const Options& o, std::ostream& out) {
  if (o.dim < 1 || o.dim > kHardDimensionCap)
    throw std::invalid_argument("--dim must lie in [1, " + std::to_string(kHardDimensionCap) + "]");
  std::mt19937_64 rng(effective_seed(o.seed));
  const auto f = random_factorization(o.dim, rng, o.strict);
  if (o.factorization) print(out, io::to_json(f));
  else print(out, io::to_json(synthesize(f)));
  return kExitOk;
}

int cmd_check_all(const Options& o, std::ostream& out) {
  RunConfig config;
  config.seed = effective_seed(o.seed);
  config.dims = o.dims;
  config.trials = o.trials;
  config.dimension_cap = o.cap;
  config.mutation = parse_mutation(o.mutant);
  config.parallel = !o.serial;
  const auto reports = check_all(config);
  if (o.json_output) print(out, format_json(reports, o.timing));
  else out << format_text(reports, o.timing);
  return all_pass(reports) ? kExitOk : kExitNegative;
}

int cmd_oracle_serve(const Options& o, std::ostream& out) {
  const auto spec = input_spec(o);
  return serve_oracle(mutated_map(spec, parse_mutation(o.mutant)), std::cin, out, std::cerr);
}

void add_input(CLI::App* sub, Options& o) {
  sub->add_option("--input,-i", o.input, "matrix file (JSON or CSV), '-' for stdin");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact toolkit for totally positive and totally nonnegative matrices", "totpos"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "matrix input format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_flag("--json", o.json_output, "machine-readable output");
  app.fallthrough();

  std::vector<std::pair<CLI::App*, Handler>> handlers;
  auto command = [&](const char* name, const char* about, Handler h) {
    CLI::App* sub = app.add_subcommand(name, about);
    handlers.emplace_back(sub, h);
    return sub;
  };

  add_input(command("classify", "label a square matrix TP, ITN_not_TP, TN_singular or NOT_TN",
                    cmd_classify),
            o);
  add_input(command("factorize", "bidiagonal parameters of an ITN matrix", cmd_factorize), o);
  command("synthesize", "matrix from bidiagonal parameters", cmd_synthesize)
      ->add_option("--input,-i", o.input, "factorization JSON");
  add_input(command("ldu", "unit lower, diagonal, unit upper factors of an ITN matrix", cmd_ldu), o);

  auto* apply_cmd = command("apply-aut", "image of an ITN matrix under an automorphism", cmd_apply);
  apply_cmd->add_option("--spec,-s", o.spec, "automorphism JSON");
  add_input(apply_cmd, o);
  apply_cmd->add_flag("--generators", o.generators, "print the generator image table instead");

  auto* verify_cmd = command("verify-aut", "check the homomorphism law on random ITN pairs", cmd_verify);
  verify_cmd->add_option("--spec,-s", o.spec, "automorphism JSON");
  verify_cmd->add_option("--trials", o.trials)->capture_default_str();
  verify_cmd->add_option("--dim", o.dim, "must equal the spec dimension when given");
  verify_cmd->add_option("--seed", o.seed)->capture_default_str();

  auto* recover_cmd = command("recover-aut", "automorphism from a generator image table", cmd_recover);
  recover_cmd->add_option("--table,-t", o.table, "generator image table JSON");
  add_input(recover_cmd, o);

  auto* cent_cmd = command("centralizer", "centralizer shape of a positive diagonal", cmd_centralizer);
  cent_cmd->add_option("--diag,-d", o.diag, "diagonal matrix JSON or array of entries");
  cent_cmd->add_option("--test", o.test, "matrix to test for membership");

  auto* perturb_cmd = command("perturb", "TP matrix within eps of an ITN matrix", cmd_perturb);
  add_input(perturb_cmd, o);
  perturb_cmd->add_option("--eps", o.eps, "entrywise bound, p/q")->capture_default_str();

  auto* extend_cmd = command("extend", "extend a TP automorphism to an ITN input", cmd_extend);
  extend_cmd->add_option("--oracle", o.oracle, "shell command speaking the line protocol");
  extend_cmd->add_option("--spec,-s", o.spec, "use a known automorphism as the oracle");
  extend_cmd->add_option("--reference,-r", o.reference, "TP reference matrix");
  extend_cmd->add_option("--second-reference", o.second_reference, "check reference independence");
  add_input(extend_cmd, o);

  auto* random_cmd = command("random", "seeded random ITN matrix", cmd_random);
  random_cmd->add_option("--dim,-n", o.dim)->required();
  random_cmd->add_option("--seed", o.seed)->capture_default_str();
  random_cmd->add_flag("--strict", o.strict, "all parameters positive (TP output)");
  random_cmd->add_flag("--factorization", o.factorization, "print the parameters instead");

  auto* check_cmd = command("check-all", "run the property battery", cmd_check_all);
  check_cmd->add_option("--seed", o.seed)->capture_default_str();
  check_cmd->add_option("--dims", o.dims)->delimiter(',')->capture_default_str();
  check_cmd->add_option("--trials", o.trials, "trials per property and dimension")->default_val(20);
  check_cmd->add_option("--cap", o.cap, "dimension cap")->capture_default_str();
  check_cmd->add_option("--mutant", o.mutant,
                        "none, transpose-in-apply, dropped-scalar or wrong-whitney-order")
      ->capture_default_str();
  check_cmd->add_flag("--serial", o.serial, "run properties one at a time");
  check_cmd->add_flag("--timing", o.timing, "include elapsed time (output no longer reproducible)");

  auto* serve_cmd = command("oracle-serve", "answer oracle requests on stdin with an automorphism",
                            cmd_oracle_serve);
  serve_cmd->add_option("--spec,-s", o.spec, "automorphism JSON");
  serve_cmd->add_option("--mutant", o.mutant, "serve a defective variant")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (const auto& [sub, handler] : handlers)
      if (sub->parsed()) return handler(o, out);
    return kExitUsage;
  } catch (const json::parse_error& e) {
    err << "error: malformed JSON at byte " << e.byte << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const MathError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNegative;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace totpos
