#include "bunzeta/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

// Shared flag wiring; each subcommand exposes the subset it uses.
void add_common_flags(CLI::App* cmd, bunzeta::RunConfig& config, std::string& format) {
  cmd->add_option("--format", format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  auto* dec = cmd->add_option("--decimal", "Append k-digit decimal approximations");
  dec->check(CLI::Range(1, 50));
  dec->each([&config](const std::string& v) { config.decimal_digits = std::stoi(v); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for bundle moduli: Chevalley orders, curve zeta "
               "functions, Frobenius trace series, and groupoid masses"};
  app.require_subcommand(1);

  bunzeta::RunConfig config;
  std::string format = "text";
  long q_value = 0;

  auto wire_q = [&](CLI::App* cmd) {
    cmd->add_option("--q", q_value, "Field size (prime power)")
        ->each([&config](const std::string& v) { config.q = std::stol(v); });
  };

  auto* info = app.add_subcommand("info", "Root-system invariants and Chevalley orders");
  info->add_option("--group", config.group_spec, "Cartan label, e.g. A1, D4, E8")->required();
  wire_q(info);
  add_common_flags(info, config, format);

  auto* zeta = app.add_subcommand("zeta", "Point counts, closed points and zeta values");
  zeta->add_option("--curve", config.curve_spec, "Curve spec: p1 | weil:... | elliptic:...")
      ->required();
  wire_q(zeta);
  zeta->add_option("--point-degree", config.point_degree_cutoff, "Closed-point degree cutoff");
  add_common_flags(zeta, config, format);

  auto* trace = app.add_subcommand("trace", "Total Frobenius-inverse trace and mass prediction");
  trace->add_option("--group", config.group_spec)->required();
  trace->add_option("--curve", config.curve_spec)->required();
  wire_q(trace);
  add_common_flags(trace, config, format);

  auto* cmp = app.add_subcommand("series-compare",
                                 "Compare the symmetric-power series with its Euler form");
  cmp->add_option("--group", config.group_spec)->required();
  cmp->add_option("--curve", config.curve_spec)->required();
  wire_q(cmp);
  cmp->add_option("--order", config.order, "Truncation order (default 20)");
  add_common_flags(cmp, config, format);

  auto* euler = app.add_subcommand("euler", "Partial Euler product with tail bound");
  euler->add_option("--group", config.group_spec)->required();
  euler->add_option("--curve", config.curve_spec)->required();
  wire_q(euler);
  euler->add_option("--point-degree", config.point_degree_cutoff,
                    "Closed-point degree cutoff (default 12)");
  add_common_flags(euler, config, format);

  auto* poincare = app.add_subcommand("poincare", "Poincare series of the bundle moduli stack");
  poincare->add_option("--group", config.group_spec)->required();
  poincare->add_option("--curve", config.curve_spec)->required();
  wire_q(poincare);
  poincare->add_option("--cohomology-cutoff", config.cohomology_cutoff,
                       "Cohomological degree cutoff (default 40)");
  add_common_flags(poincare, config, format);

  auto* verify = app.add_subcommand("verify-tamagawa",
                                    "Bundle-enumeration mass against the zeta-product prediction");
  verify->add_option("--group", config.group_spec)->required();
  verify->add_option("--curve", config.curve_spec)->required();
  wire_q(verify);
  verify->add_option("--max-twist", config.max_twist, "Splitting-type cutoff (default 20)");
  verify->add_option("--order", config.order, "Series-identity order (default 20)");
  verify->add_option("--point-degree", config.point_degree_cutoff,
                     "Euler product cutoff (default 12)");
  add_common_flags(verify, config, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  config.format = (format == "json") ? bunzeta::OutputFormat::json : bunzeta::OutputFormat::text;
  if (info->parsed()) config.command = bunzeta::Command::info;
  if (zeta->parsed()) config.command = bunzeta::Command::zeta;
  if (trace->parsed()) config.command = bunzeta::Command::trace;
  if (cmp->parsed()) config.command = bunzeta::Command::series_compare;
  if (euler->parsed()) config.command = bunzeta::Command::euler;
  if (poincare->parsed()) config.command = bunzeta::Command::poincare;
  if (verify->parsed()) config.command = bunzeta::Command::verify_tamagawa;

  return bunzeta::run(config, std::cout, std::cerr);
}
