#ifndef QAFFIN_CLI_HPP
#define QAFFIN_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qaffin {

/// Run the command-line surface on the given arguments (without argv[0]).
/// Exit code 0 on success, 1 on domain rejection or usage error, 2 on
/// internal inconsistency.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace qaffin

#endif
