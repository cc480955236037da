#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wrm/cli.hpp"
#include "wrm/io.hpp"

namespace {

using wrm::cli::RunConfig;

void add_matrix_flags(CLI::App* cmd, std::string& params, std::string& alpha, std::string& beta,
                      long& n) {
  cmd->add_option("--params", params, "recurrence weights x,y,z (rationals)")->required();
  cmd->add_option("--alpha", alpha,
                  "first-column spec (geom:c,q | arith:a,d | const:c | list:... | delta:k)")
      ->required();
  cmd->add_option("--beta", beta, "first-row spec (same grammar as --alpha)")->required();
  cmd->add_option("--n", n, "matrix order")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact weighted recurrence matrices: generation, factorization, determinants"};
  app.require_subcommand(1);

  RunConfig config;
  std::string params_text, alpha_text, beta_text, desc_text, g_text, rsvw_text, report_format;
  long n = 1;
  std::uint64_t trial_seed = 0;

  auto* gen = app.add_subcommand("gen", "print a weighted recurrence matrix");
  add_matrix_flags(gen, params_text, alpha_text, beta_text, n);
  gen->add_option("--out", config.out, "output format: csv (default) | json | latex");

  auto* factor =
      app.add_subcommand("factor", "factor into pascal-like and Toeplitz-type matrices");
  add_matrix_flags(factor, params_text, alpha_text, beta_text, n);
  factor->add_option("--mode", config.mode, "unifying | toeplitz | tan | mp")->required();
  factor->add_option("--rsvw", rsvw_text, "group parameters r,s,v,w for --mode unifying");
  factor->add_option("--out", config.out, "output format: json (default) | latex");

  auto* det = app.add_subcommand("det", "evaluate a determinant");
  add_matrix_flags(det, params_text, alpha_text, beta_text, n);
  det->add_option("--method", config.method, "bareiss (default) | toeplitz | closed");
  det->add_option("--report", report_format, "emit a cross-check report (json)");

  auto* act = app.add_subcommand("act", "apply a group element to a matrix descriptor");
  act->add_option("--side", config.side, "left | right")->required();
  act->add_option("--g", g_text, "group element v,w")->required();
  act->add_option("--desc", desc_text, "descriptor: x,y,z;<alpha spec>;<beta spec>")->required();
  act->add_option("--n", n, "matrix order")->required();
  act->add_flag("--check", config.check, "verify the transformed descriptor against the product");
  act->add_flag("--raw", config.raw, "plain multiplication instead of the action twist");

  auto* verify = app.add_subcommand("verify", "run seeded randomized sweeps over all identities");
  verify->add_option("--trials", config.trials, "trials per check (default 100)");
  auto* seed_opt = verify->add_option("--seed", config.seed, "master seed");
  verify->add_option("--check", config.only_check, "run a single named check");
  auto* trial_seed_opt =
      verify->add_option("--trial-seed", trial_seed, "rerun one trial (requires --check)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? wrm::cli::kOk : wrm::cli::kParseError;
  }

  try {
    if (gen->parsed()) config.command = RunConfig::Command::kGen;
    if (factor->parsed()) config.command = RunConfig::Command::kFactor;
    if (det->parsed()) config.command = RunConfig::Command::kDet;
    if (act->parsed()) config.command = RunConfig::Command::kAct;
    if (verify->parsed()) config.command = RunConfig::Command::kVerify;

    if (gen->parsed() || factor->parsed() || det->parsed()) {
      wrm::cli::MatrixSpec spec;
      spec.params = wrm::parse_params(params_text);
      spec.alpha = wrm::parse_sequence_spec(alpha_text);
      spec.beta = wrm::parse_sequence_spec(beta_text);
      spec.n = n;
      config.matrix = spec;
    }
    if (act->parsed()) {
      wrm::cli::MatrixSpec spec = wrm::cli::MatrixSpec::parse_desc(desc_text);
      spec.n = n;
      config.matrix = spec;
      const auto g = wrm::parse_rational_list(g_text);
      if (g.size() != 2) throw wrm::parse_error("--g expects two rationals v,w");
      config.element = std::make_pair(g[0], g[1]);
    }
    if (factor->parsed() && !rsvw_text.empty()) {
      const auto f = wrm::parse_rational_list(rsvw_text);
      if (f.size() != 4) throw wrm::parse_error("--rsvw expects four rationals r,s,v,w");
      config.rsvw = std::array<wrm::Rational, 4>{f[0], f[1], f[2], f[3]};
    }
    if (det->parsed() && !report_format.empty()) {
      if (report_format != "json") throw wrm::parse_error("--report supports only 'json'");
      config.report = true;
    }
    if (verify->parsed()) {
      if (seed_opt->count() > 0) {
        config.seed_source = "flag";
      } else if (const char* env = std::getenv("WRM_SEED")) {
        config.seed = std::strtoull(env, nullptr, 10);
        config.seed_source = "env";
      }
      if (trial_seed_opt->count() > 0) config.trial_seed = trial_seed;
    }
  } catch (const wrm::parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return wrm::cli::kParseError;
  }

  return wrm::cli::run(config, std::cout, std::cerr);
}
