#ifndef FLAGCY_CLI_HPP
#define FLAGCY_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace flagcy {

// Exit codes: 0 pass, 1 check failure, 2 usage, 3 unsupported case,
// 4 computation error, 5 I/O failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace flagcy

#endif
