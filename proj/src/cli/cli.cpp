#include "lieperiod/cli/cli.hpp"

#include "lieperiod/cli/commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ostream>
#include <sstream>

namespace lieperiod::cli {

namespace {

bool valid_weight(int w) { return w >= 8 && w % 2 == 0; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact identities between Ihara brackets, Lie brackets and period polynomials", "lieperiod"};
  app.require_subcommand(1);

  std::string format = "text";
  bool timing = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timing", timing, "Report elapsed time");

  VerifyOptions verify_opts;
  std::vector<std::string> which = {"all"};
  bool flip_sign = false;
  auto* verify = app.add_subcommand("verify", "Check closed-form identities against brute force");
  verify->add_option("--max-weight", verify_opts.max_weight, "Largest total degree n + p checked")
      ->capture_default_str();
  std::vector<std::string> which_choices = verify_formulas();
  which_choices.push_back("all");
  verify->add_option("--which", which, "Formulas to check: dptop2, ptof, dpcroch, ltop, series, all")
      ->delimiter(',')
      ->check(CLI::IsMember(which_choices));
  verify->add_flag("--flip-derivation-sign", flip_sign)->group("");

  int weight = 0;
  std::string family = "all";
  auto* relations = app.add_subcommand("relations", "Emit canonical relations among brackets");
  relations->add_option("--weight", weight, "Even weight >= 8")->required();
  relations->add_option("--family", family, "cor1, cor2, dpcroch, or all (= cor1 and cor2)")
      ->check(CLI::IsMember({"cor1", "cor2", "dpcroch", "all"}))
      ->capture_default_str();

  auto* period = app.add_subcommand("period", "Period polynomials from the relation space and KZ blocks");
  period->add_option("--weight", weight, "Even weight >= 8")->required();

  auto* kernel = app.add_subcommand("kernel", "Relation space dimension vs cusp-form dimension");
  kernel->add_option("--weight", weight, "Even weight >= 8")->required();

  for (auto* sub : {verify, relations, period, kernel}) sub->fallthrough();

  try {
    std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << "lieperiod: " << e.what() << "\n";
    return exit_usage;
  }

  if (*verify && verify_opts.max_weight < 4) {
    err << "lieperiod: --max-weight must be >= 4\n";
    return exit_usage;
  }
  if ((*relations || *period || *kernel) && !valid_weight(weight)) {
    err << "lieperiod: --weight must be even and >= 8\n";
    return exit_usage;
  }

  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  try {
    if (*verify) {
      for (const auto& w : which) {
        if (w == "all") verify_opts.which.insert(verify_formulas().begin(), verify_formulas().end());
        else verify_opts.which.insert(w);
      }
      if (flip_sign) verify_opts.sign = ihara::DerivationSign::a_then_f;
      report = cmd_verify(verify_opts);
    } else if (*relations) {
      report = cmd_relations(weight, family);
    } else if (*period) {
      report = cmd_period(weight);
    } else {
      report = cmd_kernel(weight);
    }
  } catch (const std::exception& e) {
    err << "lieperiod: " << e.what() << "\n";
    return exit_usage;
  }
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

  out << (format == "json" ? render_json(report, timing) : render_text(report, timing));
  return report.passed() ? exit_pass : exit_check_failure;
}

}  // namespace lieperiod::cli
