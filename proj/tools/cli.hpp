#ifndef KAVC_TOOLS_CLI_HPP
#define KAVC_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace kavc {

// Exit statuses.
inline constexpr int kExitValid = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInput = 65;

// Runs the command line `args` (without the program name). `in` is read only
// by from-dnf when no file is given.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace kavc

#endif  // KAVC_TOOLS_CLI_HPP
