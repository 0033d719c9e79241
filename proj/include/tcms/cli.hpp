#ifndef TCMS_CLI_HPP
#define TCMS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace tcms {

/// Command-line front end (train / classify / rank / eval / inspect).
/// Results go to out, diagnostics to err. Exit codes: 0 success,
/// 1 usage error, 2 data error.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

/// main()-style wrapper over cli_run with std::cout / std::cerr.
int cli_main(int argc, const char* const* argv);

} // namespace tcms

#endif // TCMS_CLI_HPP
