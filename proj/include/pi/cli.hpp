#ifndef PI_CLI_HPP
#define PI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pi {

// Subcommands: parse | eval | norm | equiv | synth | word | lehmer |
// import-qasm. Exit codes: 0 success/equivalent, 1 inequivalent,
// 2 usage/parse error.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace pi

#endif
