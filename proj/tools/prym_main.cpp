#include <iostream>
#include <utility>

#include "CLI11.hpp"
#include "prym/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Jacobian splitting checks for bielliptic plane quartics"};
  app.require_subcommand(1);
  prym::JobSpec job;

  auto add_common = [&](CLI::App* sub, bool needs_curve) {
    auto* in = sub->add_option("--input", job.input_path, "curve or report document (JSON)");
    auto* inline_curve = sub->add_option("--curve", job.input_text, "curve document given inline");
    in->excludes(inline_curve);
    if (needs_curve) sub->callback([in, inline_curve] {
      if (in->count() + inline_curve->count() == 0) throw CLI::RequiredError("--input or --curve");
    });
    sub->add_option("--p", job.p, "reduce a rational curve modulo this prime");
    sub->add_option("--seed", job.seed, "seed for every randomized step");
    sub->add_option("--cap-evals", job.cap_evals, "cap on point evaluations per count");
    sub->add_option("--format", job.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", job.out_path, "write the output here (atomically)");
  };

  const std::pair<const char*, const char*> commands[] = {
      {"validate", "check det A, fg and s before anything else"},
      {"split", "print a, b, c, the sextic F and the curves X and D'"},
      {"verify", "compare L-polynomials of C with those of D' and X"},
      {"bruin", "count points on a smooth degree-10 cover against Z and H"},
      {"disc-check", "recompute the ternary quartic discriminant golden value"},
      {"selftest", "run the acceptance criteria"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    const std::string n = name;
    add_common(sub, n != "disc-check" && n != "selftest");
    if (n == "split" || n == "bruin")
      sub->add_flag("--skip-validation", job.skip_validation, "evaluate formulas without validating");
    if (n == "bruin") sub->add_option("--depth", job.depth, "extension degrees of Y to count (1..5)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : prym::kExitRejected;
  }
  job.command = app.get_subcommands().front()->get_name();

  const prym::RunResult result = prym::run(job);
  try {
    prym::emit(job, result);
  } catch (const std::exception& e) {
    std::cerr << "cannot write output: " << e.what() << "\n";
    return prym::kExitInternal;
  }
  return result.exit_code;
}
