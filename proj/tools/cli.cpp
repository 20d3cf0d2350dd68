#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "thinlie/algebra.hpp"
#include "thinlie/analysis.hpp"
#include "thinlie/harness.hpp"
#include "thinlie/presentation.hpp"
#include "thinlie/serialize.hpp"

namespace thinlie::cli {
namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Config {
  std::optional<unsigned> p, n, s, a;
  std::optional<std::int64_t> lambda;
  int max_degree = 0;
  std::string preset;
  std::string relators;
  std::string algebra_in;
  std::string save_algebra;
  std::string format = "text";
  std::string output;
  bool include_odd = false;
  bool no_timing = false;
  unsigned threads = 1;
  std::string experiment;
  std::string manifest;
  std::uint64_t binom_a = 0, binom_b = 0;
};

unsigned need(const std::optional<unsigned>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required option ") + flag);
  return *v;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Presentation presentation_from(const Config& c) {
  if (!c.relators.empty()) {
    if (!c.preset.empty()) throw UsageError("--preset and --relators are mutually exclusive");
    return parse_relators(slurp(c.relators));
  }
  if (c.preset == "theorem41") return build_theorem41(need(c.p, "-p"), need(c.n, "-n"), need(c.s, "-s"));
  if (c.preset == "minus1")
    return build_minus1(need(c.p, "-p"), need(c.n, "-n"), need(c.a, "-a"), c.lambda.value_or(1), c.include_odd);
  if (c.preset == "free") return Presentation{PrimeField(need(c.p, "-p")), {}, {}, Provenance::Custom};
  if (c.preset.empty()) throw UsageError("one of --preset or --relators is required");
  throw UsageError("unknown preset '" + c.preset + "'");
}

void require_degree(const Config& c) {
  if (c.max_degree < 2) throw UsageError("--max-degree must be at least 2");
}

/// Writes to --output or the given stream.
void emit(const Config& c, std::ostream& out, const std::string& text) {
  if (c.output.empty() || c.output == "-") {
    out << text;
    return;
  }
  std::ofstream f(c.output);
  if (!f) throw UsageError("cannot write '" + c.output + "'");
  f << text;
}

json presentation_json(const Presentation& pres) {
  json rels = json::array();
  for (const auto& r : pres.relators) rels.push_back(r.str(pres.field));
  json params = json::object();
  if (pres.params.n) params["n"] = *pres.params.n;
  if (pres.params.s) params["s"] = *pres.params.s;
  if (pres.params.a) params["a"] = *pres.params.a;
  if (pres.params.lambda) params["lambda"] = *pres.params.lambda;
  return {{"p", pres.field.modulus()}, {"provenance", to_string(pres.provenance)}, {"params", params},
          {"relators", rels}};
}

std::string dims_line(const std::vector<Index>& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? " " : "") + std::to_string(d[i]);
  return s;
}

int cmd_compute(const Config& c, std::ostream& out) {
  require_degree(c);
  const Presentation pres = presentation_from(c);
  const GradedAlgebra alg = compute(pres, c.max_degree);
  if (!c.save_algebra.empty()) {
    std::ofstream f(c.save_algebra);
    if (!f) throw UsageError("cannot write '" + c.save_algebra + "'");
    f << algebra_to_json(alg).dump(1) << '\n';
  }
  const auto d = dims(alg);
  if (c.format == "json") {
    json j = {{"schema", "thinlie.dims/1"},
              {"presentation", presentation_json(pres)},
              {"max_degree", c.max_degree},
              {"dims", d}};
    emit(c, out, j.dump(2) + "\n");
  } else {
    std::ostringstream s;
    s << "p: " << pres.field.modulus() << "\nprovenance: " << to_string(pres.provenance)
      << "\nrelators: " << pres.relators.size() << "\nmax_degree: " << c.max_degree << "\ndims: " << dims_line(d)
      << '\n';
    emit(c, out, s.str());
  }
  return kOk;
}

int cmd_free_dims(const Config& c, std::ostream& out) {
  Config f = c;
  f.preset = "free";
  f.relators.clear();
  return cmd_compute(f, out);
}

int cmd_analyze(const Config& c, std::ostream& out) {
  GradedAlgebra alg = [&] {
    if (!c.algebra_in.empty()) {
      try {
        return algebra_from_json(json::parse(slurp(c.algebra_in)));
      } catch (const json::exception& e) {
        throw FormatError(std::string("malformed algebra file: ") + e.what());
      }
    }
    require_degree(c);
    return compute(presentation_from(c), c.max_degree);
  }();
  if (alg.max_degree() < 3) throw UsageError("need at least degree 3 to analyze");
  const GradedAlgebra core = thin_core(alg);
  AnalysisOptions opts;
  if (c.n) opts.q = int_pow(alg.field().modulus(), *c.n);
  const ThinReport rep = full_report(core, opts);
  if (c.format == "json")
    emit(c, out, report_to_json(rep, core.field()).dump(2) + "\n");
  else
    emit(c, out, report_to_text(rep, core.field()));
  return rep.has_structural_findings ? kStructural : kOk;
}

int cmd_verify(const Config& c, std::ostream& out) {
  std::vector<ExperimentSpec> specs;
  if (c.experiment == "all") {
    specs = c.manifest.empty() ? default_manifest() : [&] {
      try {
        return manifest_from_json(json::parse(slurp(c.manifest)));
      } catch (const json::exception& e) {
        throw HarnessError(std::string("malformed manifest: ") + e.what());
      }
    }();
  } else {
    ExperimentSpec s{c.experiment, {}};
    if (c.p) s.params["p"] = *c.p;
    if (c.n) s.params["n"] = *c.n;
    if (c.s) s.params["s"] = *c.s;
    if (c.a) s.params["a"] = *c.a;
    if (c.max_degree) s.params["max_degree"] = c.max_degree;
    specs.push_back(std::move(s));
  }
  const auto results = run_all(specs, c.threads);
  const bool timing = !c.no_timing;
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.pass;
  if (c.format == "json") {
    json list = json::array();
    for (const auto& r : results) list.push_back(result_to_json(r, timing));
    json j = {{"schema", "thinlie.verify/1"},
              {"results", list},
              {"passed", passed},
              {"total", results.size()}};
    emit(c, out, j.dump(2) + "\n");
  } else {
    std::string text;
    for (const auto& r : results) text += result_to_text(r, timing);
    text += std::to_string(passed) + "/" + std::to_string(results.size()) + " experiments passed\n";
    emit(c, out, text);
  }
  return passed == results.size() ? kOk : kFailed;
}

int cmd_binom(const Config& c, std::ostream& out) {
  const PrimeField f(need(c.p, "-p"));
  emit(c, out, std::to_string(lucas_binomial(c.binom_a, c.binom_b, f)) + "\n");
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Graded Lie algebras over F_p: construction, thin analysis and verification", "thinlie"};
  app.require_subcommand(1);

  auto field_opts = [&](CLI::App* sub) {
    sub->add_option("-p", c.p, "odd prime");
    sub->add_option("-n", c.n, "q = p^n");
  };
  auto family_opts = [&](CLI::App* sub) {
    field_opts(sub);
    sub->add_option("-s", c.s, "first finite diamond at (p^s+1)(q-1)+1");
    sub->add_option("-a", c.a, "finite diamond at a(q-1)+1");
    sub->add_option("--max-degree", c.max_degree, "highest degree computed");
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("-o,--output", c.output, "output file (default standard output)");
  };
  auto source_opts = [&](CLI::App* sub) {
    sub->add_option("--preset", c.preset, "theorem41, minus1 or free");
    sub->add_option("--relators", c.relators, "relator file");
    sub->add_option("--lambda", c.lambda, "type of the finite diamond (minus1)");
    sub->add_flag("--include-odd", c.include_odd, "keep [v_k x x] for odd k (minus1)");
  };

  CLI::App* compute_cmd = app.add_subcommand("compute", "dimensions of the maximal graded algebra");
  family_opts(compute_cmd);
  source_opts(compute_cmd);
  compute_cmd->add_option("--save-algebra", c.save_algebra, "write the algebra as JSON");

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "thin-core report; exit 3 on structural findings");
  family_opts(analyze_cmd);
  source_opts(analyze_cmd);
  analyze_cmd->add_option("--algebra", c.algebra_in, "load a saved algebra instead of computing");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run an experiment or the whole grid");
  family_opts(verify_cmd);
  verify_cmd->add_option("experiment", c.experiment, "experiment name or 'all'")->required();
  verify_cmd->add_option("--manifest", c.manifest, "grid file for 'all'");
  verify_cmd->add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1u, 256u));
  verify_cmd->add_flag("--no-timing", c.no_timing, "omit runtimes");

  CLI::App* free_cmd = app.add_subcommand("free-dims", "dimensions of the free algebra");
  family_opts(free_cmd);

  CLI::App* binom_cmd = app.add_subcommand("binom", "binomial coefficient mod p");
  field_opts(binom_cmd);
  binom_cmd->add_option("a", c.binom_a)->required();
  binom_cmd->add_option("b", c.binom_b)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  try {
    if (compute_cmd->parsed()) return cmd_compute(c, out);
    if (analyze_cmd->parsed()) return cmd_analyze(c, out);
    if (verify_cmd->parsed()) return cmd_verify(c, out);
    if (free_cmd->parsed()) return cmd_free_dims(c, out);
    if (binom_cmd->parsed()) return cmd_binom(c, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {  // usage, field, presentation, harness and range errors
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace thinlie::cli
