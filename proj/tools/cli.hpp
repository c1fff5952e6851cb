#ifndef NETATTACK_TOOLS_CLI_HPP
#define NETATTACK_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace netattack::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;   // usage or configuration error
inline constexpr int kExitRuntime = 2;  // I/O or simulation failure

/// Entry point shared by the binary and the tests. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace netattack::cli

#endif  // NETATTACK_TOOLS_CLI_HPP
