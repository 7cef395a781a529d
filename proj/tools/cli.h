#ifndef ALMOSTSTABLE_TOOLS_CLI_H_
#define ALMOSTSTABLE_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace almoststable::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kValidation = 2;
inline constexpr int kUnsolvable = 3;  // TOO_LARGE or INFEASIBLE

// Runs one subcommand. |args| excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace almoststable::cli

#endif  // ALMOSTSTABLE_TOOLS_CLI_H_
