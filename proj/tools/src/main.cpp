#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "chowbundle_cli/run.hpp"

namespace {

using chowbundle::cli::Format;
using chowbundle::cli::RunConfig;

struct Flags {
  unsigned r = 0;
  long ell = 0;
  unsigned m = 0;
  std::size_t order = 0;
  unsigned d = 0;
  std::vector<unsigned> q;
  bool full = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Chow ring computations for moduli of bundles on P1-bundles", "chowbundle"};
  app.require_subcommand(1);
  app.fallthrough();

  Format format = Format::json;
  std::string output;
  const std::map<std::string, Format> formats{{"json", Format::json}, {"text", Format::text}};
  app.add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(formats))
      ->option_text("json|text (default json)");
  app.add_option("--output", output, "Write the document to this file instead of stdout");

  Flags flags;
  std::map<std::string, CLI::App*> subs;
  auto add = [&](const std::string& name, const std::string& description) {
    auto* sub = app.add_subcommand(name, description);
    subs[name] = sub;
    return sub;
  };

  auto* chern = add("chern", "Chern classes of the pushforward bundle");
  chern->add_option("--r", flags.r, "Rank of E");
  chern->add_option("--ell", flags.ell, "Relative degree of E");
  chern->add_option("--m", flags.m, "Twist");
  chern->add_option("--order", flags.order, "Truncation order");
  chern->add_flag("--full", flags.full, "Keep w1, w2 (Grothendieck-Riemann-Roch pipeline)");

  auto* capital_f = add("capital-f", "Coefficients f_i of the generating series F(t)");
  capital_f->add_option("--r", flags.r, "Rank");
  capital_f->add_option("--ell", flags.ell, "Degree");
  capital_f->add_option("--order", flags.order, "Truncation order");

  auto* strata = add("strata-check", "Splitting-locus rank identity and complement codimension");
  strata->add_option("--r", flags.r, "Rank");
  strata->add_option("--ell", flags.ell, "Degree");
  strata->add_option("--order", flags.order, "Highest degree compared");
  strata->add_option("--m", flags.m, "Check complement codimension for twists 0..m");

  auto* relations = add("relations", "Relation classes f_{i,j} and their leading parts");
  relations->add_option("--r", flags.r, "Rank");
  relations->add_option("--d", flags.d, "Rank of the auxiliary projective bundle");

  add("distinguish", "Degree-4 lattice comparison for ell = 0 and ell = 1, rank 2");

  auto* nfg = add("nfg", "Coefficient of (a2')^q in f_q, rank 2");
  nfg->add_option("--q", flags.q, "Primes to test")->delimiter(',');
  nfg->add_option("--ell", flags.ell, "Degree");

  auto* subring = add("subring", "Ranks of graded pieces of the integral subring");
  subring->add_option("--r", flags.r, "Rank");
  subring->add_option("--ell", flags.ell, "Degree");
  subring->add_option("--order", flags.order, "Highest degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return chowbundle::cli::kExitUsage;
  }

  RunConfig config;
  config.format = format;
  if (!output.empty()) config.output = output;
  for (const auto& [name, sub] : subs) {
    if (!sub->parsed()) continue;
    config.subcommand = name;
    auto given = [&](const char* flag) {
      const auto* opt = sub->get_option_no_throw(flag);
      return opt != nullptr && opt->count() > 0;
    };
    if (given("--r")) config.r = flags.r;
    if (given("--ell")) config.ell = flags.ell;
    if (given("--m")) config.m = flags.m;
    if (given("--order")) config.order = flags.order;
    if (given("--d")) config.d = flags.d;
    config.q = flags.q;
    config.full = flags.full;
  }

  const auto result = chowbundle::cli::run(config);
  std::cerr << result.diagnostics;
  if (!config.output && result.exit_code != chowbundle::cli::kExitUsage) std::cout << result.output;
  return result.exit_code;
}
