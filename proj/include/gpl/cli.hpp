#ifndef GPL_CLI_HPP
#define GPL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gpl {

/// Runs one CLI invocation (arguments without the program name) against the
/// given streams and returns the process exit code. Output is deterministic:
/// identical inputs produce byte-identical output.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace gpl

#endif
