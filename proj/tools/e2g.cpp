// e2g: batch front end. See `e2g --help` and README.md.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "e2g/cli.hpp"

namespace {

void common(CLI::App* sub, e2g::RunConfig& c, std::string& bounds) {
  sub->add_option("--group", c.group, "group spec: C<n>, S<n>, D<n>, A x B, file:<path>");
  sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", c.out, "report path (default: stdout)");
  sub->add_option("--bounds", bounds, "arity=3,order=6,cap=1000000");
  sub->add_option("--jobs", c.jobs, "worker threads (default: E2G_JOBS or hardware)")->check(CLI::Range(1, 256));
  sub->add_option("--seed", c.seed, "seed for sampled suites");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hurwitz actions, parenthesized G-braids and G-crossed coherence"};
  app.require_subcommand(1);
  e2g::RunConfig c;
  c.jobs = e2g::default_jobs();
  std::string bounds;

  auto* orbits = app.add_subcommand("orbits", "orbit decomposition of a braid action");
  common(orbits, c, bounds);
  orbits->add_option("--r", c.r, "arity");
  orbits->add_option("--signature", c.signature, "g=[..];h=.. (component space)");
  orbits->add_option("--space", c.space, "component or hurwitz")->check(CLI::IsMember({"component", "hurwitz"}));

  auto* check = app.add_subcommand("check", "relation suite and operad axioms");
  common(check, c, bounds);
  check->add_option("--suite", c.suite, "relations, operad or all")->check(CLI::IsMember({"relations", "operad", "all"}));
  check->add_option("--mutate", c.mutate, "braiding (relations) or labels (operad)")
      ->check(CLI::IsMember({"braiding", "labels"}));
  check->add_option("--sample", c.sample, "random assignments per relation instead of all");

  auto* groth = app.add_subcommand("grothendieck", "Grothendieck construction vs the direct action groupoid");
  common(groth, c, bounds);
  groth->add_option("--r", c.r, "arity");

  auto* coh = app.add_subcommand("coherence", "coherence check or scalar solver for G-crossed data");
  common(coh, c, bounds);
  coh->add_option("--builtin", c.builtin, "group: one object per sector")->check(CLI::IsMember({"group"}));
  coh->add_option("--data", c.data, "JSON data file");
  coh->add_flag("--solve", c.solve, "enumerate all coherent scalar tables");
  coh->add_option("--scalars", c.scalars, "scalar group Z/n as C<n>, Z<n> or n");
  coh->add_option("--mutate", c.mutate, "braiding: flip one braiding scalar")->check(CLI::IsMember({"braiding"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e2g::kExitUsage;
  }
  c.command = app.get_subcommands().front()->get_name();
  c.r_given = orbits->count("--r") > 0;
  std::string text, err;
  int code = e2g::kExitPass;
  try {
    if (!bounds.empty()) c.bounds = e2g::parse_bounds(bounds);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e2g::kExitUsage;
  }
  code = e2g::run_and_render(c, text, err);
  if (!err.empty()) {
    std::cerr << err << "\n";
    return code;
  }
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(c.out, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << c.out << "'\n";
      return e2g::kExitUsage;
    }
    out << text;
  }
  return code;
}
