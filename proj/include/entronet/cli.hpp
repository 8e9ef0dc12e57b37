#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// Command line front end. One subcommand per operation family:
//
//   enumerate    list distinct observation patterns of a given size
//   classify     name the shape of a stored network
//   gate         evaluate one NAND/NOR gate from a pair of input bits
//   search       truth tables reachable within an observation budget
//   synthesize   lower a boolean expression to a NAND netlist
//   eval-netlist evaluate a stored netlist (pure or entropy-backed)
//   simulate     Monte Carlo of the reservoir gate from a JSON config
//   profile      sample a two-state transition entropy profile as CSV
//
// Exit codes: 0 success (including --help), 1 domain failure (bad file,
// unparsable expression, out-of-range model input; one-line diagnostic on
// the error stream), 2 usage error (unknown flag, malformed invocation).

namespace entronet {

// `args` excludes the program name. Output and diagnostics go to the given
// streams; nothing is written elsewhere except files named on the command
// line. Never throws: every failure is mapped to an exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace entronet
