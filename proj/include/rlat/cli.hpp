#ifndef RLAT_CLI_HPP_
#define RLAT_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace rlat {

  inline constexpr char const* kToolName    = "rlat";
  inline constexpr char const* kToolVersion = "0.1.0";

  // Exit codes of the command-line tool.
  inline constexpr int kExitOk     = 0;
  inline constexpr int kExitFailed = 1;  // a check failed or an assertion said no
  inline constexpr int kExitUsage  = 2;  // bad arguments or input

  // Runs one command line (without the program name). Data goes to `out`,
  // diagnostics to `err`.
  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err);

}  // namespace rlat

#endif  // RLAT_CLI_HPP_
