#ifndef FREELIE_TOOLS_CLI_HPP
#define FREELIE_TOOLS_CLI_HPP

#include <iostream>
#include <string>
#include <vector>

namespace freelie::cli {

// Exit codes: 0 success, 1 verification failure or alarm, 2 usage or input
// error. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr);

}  // namespace freelie::cli

#endif  // FREELIE_TOOLS_CLI_HPP
