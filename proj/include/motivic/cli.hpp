#ifndef MOTIVIC_CLI_HPP
#define MOTIVIC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace motivic {

/// Dispatch a full command line (without argv[0]). Returns the process
/// exit status: 0 on success, 1 on domain errors (error name goes to
/// `err`), 2 on usage errors. Output is byte-stable for a fixed command.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace motivic

#endif  // MOTIVIC_CLI_HPP
