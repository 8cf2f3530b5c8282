// Command-line driver: verify, involutions, oracle.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tits/driver.hpp"

namespace {

void add_common(CLI::App* cmd, tits::RunConfig& cfg, std::string& z_text) {
  cmd->add_option("--type", cfg.cartan_type, "Cartan type, e.g. A2, B3, G2");
  cmd->add_option("--mode", cfg.mode, "fq or complex")->check(CLI::IsMember({"fq", "complex"}));
  cmd->add_option("--q", cfg.q, "field size (prime power)");
  cmd->add_option("--spec", cfg.spec, "zeta, tits or custom")->check(CLI::IsMember({"zeta", "tits", "custom"}));
  cmd->add_option("--z", z_text, "exponents of z_a for --spec custom, e.g. \"1,0,3\"");
  cmd->add_option("--zeta", cfg.zeta_override, "override the exponent used by --spec zeta");
  cmd->add_option("--max-group", cfg.bounds.max_group_order, "largest Weyl group to enumerate")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-word", cfg.bounds.max_word_length, "longest element for reduced-word sweeps")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", cfg.out, "write the JSON report here");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid-compatible lifts of Weyl group involutions to the torus normalizer"};
  app.require_subcommand(1);

  tits::RunConfig cfg;
  std::string z_text;

  auto* verify = app.add_subcommand("verify", "check phi(S(w)) = S(w)^-1 for every involution w");
  add_common(verify, cfg, z_text);
  verify->add_flag("--all", cfg.all, "run the default sweep over types, q and both sections");

  auto* involutions = app.add_subcommand("involutions", "list involutions with their Deodhar chains");
  add_common(involutions, cfg, z_text);

  auto* oracle = app.add_subcommand("oracle", "cross-check the abstract model against SL_n matrices (type A)");
  add_common(oracle, cfg, z_text);
  oracle->add_option("--samples", cfg.samples, "random products to compare");
  oracle->add_option("--seed", cfg.seed, "seed for the sampled products");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!z_text.empty()) cfg.z = tits::parse_exponent_list(z_text);
    tits::CommandResult res;
    if (verify->parsed())
      res = tits::cmd_verify(cfg);
    else if (involutions->parsed())
      res = tits::cmd_involutions(cfg);
    else
      res = tits::cmd_oracle(cfg);
    std::cout << res.summary << '\n';
    return res.exit_code;
  } catch (const tits::BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
