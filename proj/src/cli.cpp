#include "constructive/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "constructive/bisection.hpp"
#include "constructive/capture.hpp"
#include "constructive/expression.hpp"
#include "constructive/machine.hpp"
#include "constructive/specker.hpp"

namespace constructive::cli {

namespace {

Rational config_rational(const nlohmann::json& value, const char* key) {
  if (value.is_string()) {
    try {
      return Rational::parse(value.get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorKind::Config, std::string(key) + ": " + e.what());
    }
  }
  if (value.is_number_integer()) return Rational(value.get<long>());
  throw Error(ErrorKind::Config, std::string(key) + " must be a \"p/q\" string or an integer");
}

std::uint64_t config_natural(const nlohmann::json& value, const char* key) {
  if (!value.is_number_integer() || value.get<long long>() < 0) {
    throw Error(ErrorKind::Config, std::string(key) + " must be a non-negative integer");
  }
  return value.get<std::uint64_t>();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Config, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Config, "cannot write " + path);
  out << content;
}

Rational parse_arg(const std::string& text) {
  return Rational::parse(text);
}

FunctionOracle parse_oracle(const std::string& spec) {
  const auto at = spec.find('@');
  if (at == std::string::npos) throw Error(ErrorKind::Parse, "oracle must be step@c or const@v, got '" + spec + "'");
  const std::string kind = spec.substr(0, at);
  const Rational value = Rational::parse(spec.substr(at + 1));
  if (kind == "step") return step_oracle(value);
  if (kind == "const") return constant_oracle(value);
  throw Error(ErrorKind::Parse, "unknown oracle '" + kind + "'");
}

struct Options {
  std::string config_path;
  std::optional<std::uint64_t> fuel;
  std::optional<std::uint64_t> index_bound;
  std::optional<std::uint64_t> budget;
  std::optional<std::string> a;
  std::optional<std::string> b;
  std::optional<std::string> trace_out;
  bool strict = false;

  RunConfig resolve() const {
    RunConfig config;
    if (!config_path.empty()) config = load_config(read_file(config_path));
    if (fuel) config.fuel = *fuel;
    if (index_bound) config.index_bound = *index_bound;
    if (budget) config.budget = *budget;
    try {
      if (a) config.a = Rational::parse(*a);
      if (b) config.b = Rational::parse(*b);
    } catch (const Error& e) {
      throw Error(ErrorKind::Config, e.what());
    }
    if (trace_out) config.output_path = *trace_out;
    config.validate();
    return config;
  }
};

SeparatedSets make_sets(const RunConfig& config) {
  return SeparatedSets(
      SpeckerSeq::from_machines(IntervalSpec::make(config.a, config.b), {config.index_bound, config.budget}));
}

int cmd_approx(const std::string& expr, int k, std::ostream& out) {
  const Rational value = parse_real(expr).approx(k);
  out << "rational: " << value.to_string() << "\n";
  out << "decimal:  " << value.to_decimal(40) << "\n";
  return kExitOk;
}

int cmd_specker(const RunConfig& config, std::uint64_t n, std::ostream& out) {
  const SpeckerSeq seq = SpeckerSeq::from_machines(IntervalSpec::make(config.a, config.b),
                                                   {config.index_bound, config.budget});
  seq.term(n);  // EnumerationExhausted before any output
  out << "# interval [" << config.a.to_string() << ", " << config.b.to_string() << "], index_bound "
      << config.index_bound << ", budget " << config.budget << ", halters discovered " << seq.available() << "\n";
  out << "# h =";
  for (auto h : seq.enumeration()) out << " " << h;
  out << "\n";
  out << "n\th(n)\ts_n\tdecimal\n";
  for (std::uint64_t i = 0; i <= n; ++i) {
    const Rational& s = seq.term(i);
    out << i << "\t" << seq.enumeration()[i] << "\t" << s.to_string() << "\t" << s.to_decimal(40) << "\n";
  }
  return kExitOk;
}

int cmd_member(const RunConfig& config, const std::string& set, const std::vector<std::string>& points, bool json,
               bool strict, std::ostream& out) {
  if (set != "A" && set != "B") throw Error(ErrorKind::Parse, "set must be A or B, got '" + set + "'");
  const SeparatedSets sets = make_sets(config);
  bool any_decided = false;
  for (const auto& text : points) {
    const Rational x = parse_arg(text);
    const DisjointnessReport report = disjointness_check(sets, x, config.fuel);
    if (json) {
      out << to_json_line(report) << "\n";
      any_decided = any_decided || report.outcome_A.accepted() || report.outcome_B.accepted();
      continue;
    }
    const auto& outcome = set == "A" ? report.outcome_A : report.outcome_B;
    out << set << " x=" << x.to_string() << ": ";
    if (outcome.accepted()) {
      any_decided = true;
      out << (set == "A" ? "Accept" : "NotInB") << "(n=" << outcome.accept().witness << ")";
    } else if (set == "A") {
      out << describe(outcome);
    } else {
      out << "Unknown; InB-at-all-tested-levels (" << report.tested_levels << " levels)";
    }
    out << " fuel=" << config.fuel;
    if (!outcome.accepted() && sets.specker().available() < config.fuel) {
      out << " [enumeration exhausted at " << sets.specker().available() << " terms]";
    }
    out << "\n";
  }
  return strict && !any_decided ? kExitResource : kExitOk;
}

int cmd_bisect(const RunConfig& config, const std::string& oracle, const std::string& p_text,
               const std::string& q_text, std::uint64_t depth, std::ostream& out) {
  const FunctionOracle f = parse_oracle(oracle);
  const Rational p = parse_arg(p_text);
  const Rational q = parse_arg(q_text);
  const BisectionTrace trace = bisect(f, p, q, config.fuel, depth);
  if (config.output_path) write_file(*config.output_path, trace_to_json(trace) + "\n");
  const Rational width = trace.final_q - trace.final_p;
  out << "oracle " << oracle << " on [" << p.to_string() << ", " << q.to_string() << "], depth " << trace.depth()
      << "\n";
  const ApartnessWitness& initial = trace.steps.empty() ? trace.final_witness : trace.steps.front().witness;
  out << "initial witness k=" << initial.k << "\n";
  out << "final interval [" << trace.final_p.to_string() << ", " << trace.final_q.to_string() << "]\n";
  out << "final width " << width.to_string() << "\n";
  out << "midpoint " << ((trace.final_p + trace.final_q) / Rational(2)).to_decimal(40) << "\n";
  return kExitOk;
}

int cmd_capture(const RunConfig& config, std::optional<std::uint64_t> index, const std::string& program_file,
                std::ostream& out) {
  std::uint64_t n = 0;
  if (!program_file.empty()) {
    n = encode(parse_program(read_file(program_file)));
  } else if (index) {
    n = *index;
  } else {
    throw Error(ErrorKind::Parse, "capture needs a program index or --program");
  }
  const CaptureSequence capture = capture_sequence(n, [](std::uint64_t k) { return Rational(BigInt(1), BigInt(k)); });
  const HaltReport halt = halts_within(n, config.fuel);
  out << "# program " << n << ", base d_k = 1/k, ";
  if (halt.halted) {
    out << "halts at step " << *halt.at_step << "\n";
  } else {
    out << "no halt within " << config.fuel << " steps\n";
  }
  out << "k\tQ(n,k)\tx_k\n";
  for (std::uint64_t k = 1; k <= config.fuel; ++k) {
    const std::uint64_t q = capture.q(k);
    out << k << "\t" << q << "\t" << capture.base()(q).to_string() << "\n";
  }
  return kExitOk;
}

}  // namespace

void RunConfig::validate() const {
  if (!(a < b)) throw Error(ErrorKind::Config, "need a < b, got a=" + a.to_string() + " b=" + b.to_string());
  if (index_bound == 0 || budget == 0 || fuel == 0) {
    throw Error(ErrorKind::Config, "index_bound, budget and fuel must all be at least 1");
  }
}

RunConfig load_config(const std::string& json_text, RunConfig base) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Config, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::Config, "config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "index_bound") {
      base.index_bound = config_natural(value, "index_bound");
    } else if (key == "budget") {
      base.budget = config_natural(value, "budget");
    } else if (key == "fuel") {
      base.fuel = config_natural(value, "fuel");
    } else if (key == "a") {
      base.a = config_rational(value, "a");
    } else if (key == "b") {
      base.b = config_rational(value, "b");
    } else {
      throw Error(ErrorKind::Config, "unknown config key '" + key + "'");
    }
  }
  base.validate();
  return base;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::Config:
    case ErrorKind::InvalidArgument:
    case ErrorKind::NegativePrecision:
      return kExitUsage;
    case ErrorKind::DivisionByZero:
    case ErrorKind::InvalidWitness:
    case ErrorKind::OutOfInterval:
    case ErrorKind::NoInitialGap:
      return kExitDomain;
    case ErrorKind::EnumerationExhausted:
    case ErrorKind::StepStalled:
      return kExitResource;
  }
  return kExitDomain;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constructive reals, Specker sets and bisection traces", "constructive"};
  app.fallthrough();
  app.require_subcommand(1);

  Options opt;
  app.add_option("--config", opt.config_path, "JSON config with index_bound, budget, fuel, a, b");
  app.add_option("--fuel", opt.fuel, "search fuel");
  app.add_option("--index-bound", opt.index_bound, "machine pool size");
  app.add_option("--budget", opt.budget, "machine step budget");
  app.add_option("--a", opt.a, "left end of the interval");
  app.add_option("--b", opt.b, "right end of the interval");
  app.add_option("--trace-out", opt.trace_out, "write the bisection trace JSON here");
  app.add_flag("--strict", opt.strict, "exit 4 when every verdict is Unknown");

  std::string expr;
  int k = 10;
  auto* approx = app.add_subcommand("approx", "approximate a real expression to within 2^-k");
  approx->add_option("expr", expr)->required();
  approx->add_option("-k", k, "precision exponent")->check(CLI::NonNegativeNumber);

  std::uint64_t n = 0;
  auto* specker = app.add_subcommand("specker", "print Specker terms s_0..s_n");
  specker->add_option("n", n)->required();

  std::string set;
  std::vector<std::string> points;
  bool json = false;
  auto* member = app.add_subcommand("member", "three-valued membership in A or B");
  member->add_option("set", set, "A or B")->required();
  member->add_option("x", points, "rational points")->required();
  member->add_flag("--json", json, "one JSON report per point");

  std::string oracle, p_text, q_text;
  std::uint64_t depth = 40;
  auto* bisect_cmd = app.add_subcommand("bisect", "nested-interval search for a discontinuity");
  bisect_cmd->add_option("oracle", oracle, "step@c or const@v")->required();
  bisect_cmd->add_option("p", p_text)->required();
  bisect_cmd->add_option("q", q_text)->required();
  bisect_cmd->add_option("--depth", depth, "number of halvings");

  std::optional<std::uint64_t> program_index;
  std::string program_file;
  auto* capture = app.add_subcommand("capture", "tabulate Q(n,k) and x_k = d_{Q(n,k)} for d_k = 1/k");
  capture->add_option("n", program_index, "program index");
  capture->add_option("--program", program_file, "program text file (INC c / DJZ c t / HALT)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const RunConfig config = opt.resolve();
    if (*approx) return cmd_approx(expr, k, out);
    if (*specker) return cmd_specker(config, n, out);
    if (*member) return cmd_member(config, set, points, json, opt.strict, out);
    if (*bisect_cmd) return cmd_bisect(config, oracle, p_text, q_text, depth, out);
    if (*capture) return cmd_capture(config, program_index, program_file, out);
  } catch (const StepStalledError& e) {
    err << "error: " << e.what() << " (partial trace depth " << e.partial().depth() << ")\n";
    return exit_code_for(e.kind());
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}

}  // namespace constructive::cli
