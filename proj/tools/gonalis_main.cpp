// gonalis: exact computation of graded Betti tables, gonal maps and radical
// parametrizations of algebraic curves.  Subcommands are registered as the
// corresponding engine modules land; run with --help for the current set.

#include <CLI11.hpp>

#include <cstdio>

int main(int argc, char** argv) {
  CLI::App app{"gonalis: syzygies and gonal maps of algebraic curves"};
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;  // exit code 1 for any parse error
  }
  if (app.get_subcommands().empty()) {
    std::puts("no subcommand given; see --help");
    return 1;
  }
  return 0;
}
