#include "segre_cli/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "segre/errors.hpp"
#include "segre/hilbert.hpp"

namespace segre::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct InputOptions {
  std::string path;
  std::vector<std::string> example;
  std::optional<std::uint32_t> characteristic;
};

struct SegreOptions {
  std::optional<std::uint64_t> seed;
  std::string strategy = "single";
  unsigned repeats = 1;
  std::string caps = "default";
  bool serial = false;
};

std::string read_all(std::istream& in) {
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::int64_t> parse_params(const std::vector<std::string>& words) {
  std::vector<std::int64_t> params;
  for (std::size_t i = 1; i < words.size(); ++i) {
    try {
      std::size_t used = 0;
      params.push_back(std::stoll(words[i], &used));
      if (used != words[i].size()) throw std::invalid_argument(words[i]);
    } catch (const std::logic_error&) {
      throw ValidationError("example parameter '" + words[i] + "' is not an integer");
    }
  }
  return params;
}

// Either --example "name params..." or a file path ("-" for stdin).
IdealFile load_input(const InputOptions& opts, std::uint64_t seed) {
  if (!opts.example.empty()) {
    std::vector<std::string> words;
    for (const std::string& e : opts.example) {
      std::istringstream in(e);
      std::string w;
      while (in >> w) words.push_back(w);
    }
    return generate_example(words.at(0), parse_params(words), seed,
                            opts.characteristic.value_or(kDefaultCharacteristic));
  }
  if (opts.path.empty()) throw ValidationError("no input: give a file path, '-' or --example");
  std::string text;
  if (opts.path == "-") {
    text = read_all(std::cin);
  } else {
    std::ifstream in(opts.path);
    if (!in) throw ValidationError("cannot open input file '" + opts.path + "'");
    text = read_all(in);
  }
  return parse_ideal_file(text);
}

std::uint64_t entropy_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

void add_input_options(CLI::App* app, InputOptions& opts) {
  app->add_option("input", opts.path, "Ideal file ('-' reads stdin)");
  app->add_option("--example", opts.example, "Use a built-in example, e.g. --example rnc 3")->expected(1, 5);
  app->add_option("--char", opts.characteristic, "Prime characteristic (overrides the file)");
}

void add_segre_options(CLI::App* app, SegreOptions& opts) {
  app->add_option("--seed", opts.seed, "Random seed (default: OS entropy, echoed in the report)");
  app->add_option("--strategy", opts.strategy, "Residual saturation: single or full")
      ->check(CLI::IsMember({"single", "full"}));
  app->add_option("--repeats", opts.repeats, "Runs with derived seeds that must agree")->check(CLI::PositiveNumber);
  app->add_option("--caps", opts.caps, "Resource caps: small, default or large")
      ->check(CLI::IsMember({"small", "default", "large"}));
  app->add_flag("--serial", opts.serial, "Compute the residuals one after another");
}

Json to_json_error(const char* kind, const std::string& message) {
  Json e;
  e["kind"] = kind;
  e["message"] = message;
  return Json{{"error", e}};
}

int run_segre(const std::string& command, const InputOptions& in, const SegreOptions& so, std::ostream& out) {
  const std::uint64_t seed = so.seed.value_or(entropy_seed());
  IdealFile file = load_input(in, seed);
  if (in.characteristic) file.characteristic = *in.characteristic;
  const Ideal ideal = load_ideal(file, LoadOptions{in.characteristic, true});

  SegreConfig cfg;
  cfg.seed = seed;
  cfg.strategy = parse_strategy(so.strategy);
  cfg.repeats = so.repeats;
  cfg.parallel = !so.serial;
  cfg.limits = ResourceLimits::profile(so.caps);

  const auto start = Clock::now();
  const SegreResult result = segre_degrees(ideal, cfg);
  const std::chrono::duration<double> total = Clock::now() - start;
  const bool with_cf = command != "segre";
  out << segre_report(command, file, result, with_cf, so.repeats, total.count()).dump(2) << "\n";
  return kSuccess;
}

int run_dim_deg(const InputOptions& in, const std::string& caps, std::ostream& out) {
  IdealFile file = load_input(in, 0);
  if (in.characteristic) file.characteristic = *in.characteristic;
  const Ideal ideal = load_ideal(file, LoadOptions{in.characteristic, true});
  const DimDegree dd = dim_degree(ideal, ResourceLimits::profile(caps));
  Json j;
  j["k"] = static_cast<int>(ideal.ring()->num_vars()) - 1;
  j["dim"] = dd.proj_dim;
  j["degree"] = dd.degree;
  out << j.dump(2) << "\n";
  return kSuccess;
}

int run_gb(const InputOptions& in, const std::string& caps, std::ostream& out) {
  IdealFile file = load_input(in, 0);
  if (in.characteristic) file.characteristic = *in.characteristic;
  const Ideal ideal = load_ideal(file, LoadOptions{in.characteristic, false});
  const GroebnerBasis gb = groebner_basis(ideal, ResourceLimits::profile(caps));
  for (const Polynomial& g : gb.elements()) out << to_string(g) << "\n";
  return kSuccess;
}

int run_generate(const std::vector<std::string>& words, std::uint64_t seed, std::uint32_t characteristic,
                 std::ostream& out) {
  out << render(generate_example(words.at(0), parse_params(words), seed, characteristic));
  return kSuccess;
}

int run_bench(std::uint64_t seed, int max_rnc, const std::string& strategy, bool serial, std::ostream& out) {
  std::vector<std::pair<std::string, std::vector<std::int64_t>>> family = {
      {"point-scheme", {}}, {"cusp-lines", {}}, {"segre", {1, 1}}, {"hypersurface", {3, 3}}, {"segre", {1, 2}},
  };
  for (int k = 3; k <= max_rnc; ++k) family.push_back({"rnc", {k}});
  for (const auto& [name, params] : family) {
    const IdealFile file = generate_example(name, params, seed);
    const Ideal ideal = load_ideal(file, LoadOptions{std::nullopt, true});
    SegreConfig cfg;
    cfg.seed = seed;
    cfg.strategy = parse_strategy(strategy);
    cfg.parallel = !serial;
    const auto start = Clock::now();
    const SegreResult r = segre_degrees(ideal, cfg);
    const std::chrono::duration<double> total = Clock::now() - start;
    std::string label = name;
    for (auto p : params) label += " " + std::to_string(p);
    Json j;
    j["example"] = label;
    j["k"] = r.k;
    j["n"] = r.n;
    j["segre"] = r.segre_degrees;
    j["euler"] = chern_fulton(r).euler;
    j["seconds"] = total.count();
    out << j.dump() << "\n" << std::flush;
  }
  return kSuccess;
}

}  // namespace

Json segre_report(const std::string& command, const IdealFile& input, const SegreResult& result,
                  bool with_chern_fulton, unsigned repeats, double total_seconds) {
  Json j;
  j["command"] = command;
  j["input"] = {{"variables", input.variables}, {"char", input.characteristic}, {"generators", input.generators}};
  j["k"] = result.k;
  j["n"] = result.n;
  j["m"] = result.m;
  j["seed"] = result.seed;
  j["strategy"] = std::string(to_string(result.strategy));
  j["repeats"] = repeats;
  j["segre"] = result.segre_degrees;
  if (with_chern_fulton) {
    const ChernFultonResult cf = chern_fulton(result);
    j["chern_fulton"] = cf.chern_fulton_degrees;
    j["euler"] = cf.euler;
  }
  j["residual_degrees"] = result.residual_degrees;
  j["bezout_identity"] = verify_bezout_identity(result);
  Json steps = Json::array();
  for (std::size_t i = 0; i < result.step_seconds.size(); ++i) {
    steps.push_back({{"d", result.k - result.n + static_cast<int>(i)}, {"seconds", result.step_seconds[i]}});
  }
  j["timings"] = {{"total_seconds", total_seconds}, {"steps", steps}};
  return j;
}

Json without_timings(Json report) {
  report.erase("timings");
  return report;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degrees of Segre classes of projective schemes", "segrecalc"};
  app.require_subcommand(1);

  InputOptions input;
  SegreOptions segre_opts;
  std::string caps = "default";

  auto* segre_cmd = app.add_subcommand("segre", "Degrees of the Segre classes");
  auto* cf_cmd = app.add_subcommand("chern-fulton", "Segre degrees plus Chern-Fulton degrees");
  auto* euler_cmd = app.add_subcommand("euler", "Euler characteristic of a smooth scheme");
  for (auto* c : {segre_cmd, cf_cmd, euler_cmd}) {
    add_input_options(c, input);
    add_segre_options(c, segre_opts);
  }
  auto* dd_cmd = app.add_subcommand("dim-deg", "Projective dimension and degree");
  auto* gb_cmd = app.add_subcommand("gb", "Reduced Groebner basis (grevlex)");
  for (auto* c : {dd_cmd, gb_cmd}) {
    add_input_options(c, input);
    c->add_option("--caps", caps, "Resource caps: small, default or large")
        ->check(CLI::IsMember({"small", "default", "large"}));
  }

  std::vector<std::string> gen_words;
  std::uint64_t gen_seed = 0;
  std::uint32_t gen_char = kDefaultCharacteristic;
  auto* gen_cmd = app.add_subcommand("generate", "Print a built-in example as an ideal file");
  gen_cmd->add_option("example", gen_words, "Name and integer parameters, e.g. rnc 3")->required();
  gen_cmd->add_option("--seed", gen_seed, "Seed for random families");
  gen_cmd->add_option("--char", gen_char, "Prime characteristic");

  std::uint64_t bench_seed = 1;
  int bench_max_rnc = 5;
  std::string bench_strategy = "single";
  bool bench_serial = false;
  auto* bench_cmd = app.add_subcommand("bench", "Time the built-in example family");
  bench_cmd->add_option("--seed", bench_seed, "Random seed");
  bench_cmd->add_option("--max-rnc", bench_max_rnc, "Largest rational normal curve P^k")->check(CLI::Range(3, 12));
  bench_cmd->add_option("--strategy", bench_strategy, "single or full")->check(CLI::IsMember({"single", "full"}));
  bench_cmd->add_flag("--serial", bench_serial, "Compute the residuals one after another");

  std::vector<std::string> argv_store = {"segrecalc"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    out << to_json_error("usage", e.what()).dump(2) << "\n";
    return kInvalidInput;
  }

  try {
    if (segre_cmd->parsed()) return run_segre("segre", input, segre_opts, out);
    if (cf_cmd->parsed()) return run_segre("chern-fulton", input, segre_opts, out);
    if (euler_cmd->parsed()) return run_segre("euler", input, segre_opts, out);
    if (dd_cmd->parsed()) return run_dim_deg(input, caps, out);
    if (gb_cmd->parsed()) return run_gb(input, caps, out);
    if (gen_cmd->parsed()) return run_generate(gen_words, gen_seed, gen_char, out);
    if (bench_cmd->parsed()) return run_bench(bench_seed, bench_max_rnc, bench_strategy, bench_serial, out);
  } catch (const ParseError& e) {
    Json j = to_json_error("parse", e.what());
    j["error"]["line"] = e.line();
    j["error"]["column"] = e.column();
    out << j.dump(2) << "\n";
    err << "parse error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const ValidationError& e) {
    out << to_json_error("validation", e.what()).dump(2) << "\n";
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const ResourceLimitError& e) {
    out << to_json_error("resource_limit", e.what()).dump(2) << "\n";
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const InconsistentRunsError& e) {
    Json j = to_json_error("inconsistent_runs", e.what());
    j["error"]["outputs"] = e.outputs();
    out << j.dump(2) << "\n";
    err << "inconsistent runs: " << e.what() << "\n";
    return kInconsistentRuns;
  } catch (const DegenerateSampleError& e) {
    out << to_json_error("degenerate_sample", e.what()).dump(2) << "\n";
    err << "degenerate sample: " << e.what() << "\n";
    return kInconsistentRuns;
  } catch (const std::exception& e) {
    out << to_json_error("internal", e.what()).dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return kInternalFailure;
  }
  return kInternalFailure;
}

}  // namespace segre::cli
