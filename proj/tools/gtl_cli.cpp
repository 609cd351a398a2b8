// gtl: command-line front end.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "gtl/commands.hpp"

namespace {

struct Options {
  std::string preset, graph_file, methods, trace, out, format = "text", property;
  std::optional<int> bound;
  std::size_t cap = gtl::HeckeAlgebra::kDefaultCap;
  std::size_t closure_cap = gtl::CoxeterGroup::kDefaultClosureCap;
};

void add_common(CLI::App* cmd, Options& o) {
  auto* p = cmd->add_option("--preset", o.preset, "named Coxeter graph (A3, B3, D4, H3, I2(5), ~A2, ...)");
  auto* g = cmd->add_option("--graph", o.graph_file, "Coxeter graph file");
  p->excludes(g);
  cmd->add_option("--bound", o.bound, "length bound (defaults to the whole group for small finite presets)");
  cmd->add_option("--methods", o.methods, "comma list of m, oracle, trace, or all");
  cmd->add_option("--trace", o.trace, "trace table file");
  cmd->add_option("--out", o.out, "write output here instead of stdout");
  cmd->add_option("--cap", o.cap, "element cap for the Hecke algebra oracle");
  cmd->add_option("--closure-cap", o.closure_cap, "cap on reduced words stored per element");
  cmd->add_option("--format", o.format, "text or tsv")->check(CLI::IsMember({"text", "tsv"}));
}

gtl::RunConfig make_config(const Options& o) {
  gtl::RunConfig cfg;
  if (!o.preset.empty()) {
    cfg.graph = gtl::preset(o.preset);
    cfg.from_preset = true;
  } else if (!o.graph_file.empty()) {
    cfg.graph = gtl::parse_graph(gtl::detail::read_file(o.graph_file));
  } else {
    throw gtl::PreconditionError("one of --preset or --graph is required");
  }
  cfg.bound = o.bound;
  if (!o.methods.empty()) cfg.methods = gtl::parse_methods(o.methods);
  if (!o.trace.empty()) cfg.trace_path = o.trace;
  cfg.oracle_cap = o.cap;
  cfg.closure_cap = o.closure_cap;
  cfg.format = o.format == "tsv" ? gtl::OutputFormat::tsv : gtl::OutputFormat::text;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temperley-Lieb quotients of Hecke algebras: canonical bases, mu coefficients and traces"};
  app.set_version_flag("--version", std::string("gtl ") + gtl::kVersion);
  app.require_subcommand(1);
  Options o;
  auto* basis = app.add_subcommand("basis", "c-basis dump (both algorithms); --methods oracle adds the C'-basis");
  auto* mu = app.add_subcommand("mu", "mu coefficients by the quotient recursion, the oracle and the trace");
  auto* verify = app.add_subcommand("verify", "check Property F, S, W or B");
  auto* structure = app.add_subcommand("structure", "c-basis structure constants in the delta basis");
  for (auto* c : {basis, mu, verify, structure}) add_common(c, o);
  verify->add_option("property", o.property, "F, S, W or B")->required()->check(CLI::IsMember({"F", "S", "W", "B"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : gtl::exit_code::usage;
  }

  gtl::CommandResult result;
  try {
    gtl::RunConfig cfg = make_config(o);
    if (basis->parsed()) result = gtl::cmd_basis(cfg);
    else if (mu->parsed()) result = gtl::cmd_mu(cfg);
    else if (verify->parsed()) result = gtl::cmd_verify(cfg, o.property);
    else result = gtl::cmd_structure(cfg);
  } catch (const gtl::ConsistencyError& e) {
    std::cerr << "gtl: internal consistency failure: " << e.what() << "\n";
    return gtl::exit_code::consistency;
  } catch (const gtl::CapExceeded& e) {
    std::cerr << "gtl: " << e.what() << " (raise --cap/--closure-cap or lower --bound)\n";
    return gtl::exit_code::usage;
  } catch (const gtl::Error& e) {
    std::cerr << "gtl: " << e.what() << "\n";
    return gtl::exit_code::usage;
  }

  if (o.out.empty()) {
    std::cout << result.output;
  } else {
    std::ofstream f(o.out);
    if (!(f << result.output)) {
      std::cerr << "gtl: cannot write " << o.out << "\n";
      return gtl::exit_code::usage;
    }
  }
  return result.exit_code;
}
