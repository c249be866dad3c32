#ifndef MPWRIGHT_CLI_HPP
#define MPWRIGHT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace mpw {

/// Batch front end. Exit codes: 0 success, 1 one or more checks failed
/// (for `suite`, the number of failed checks), 2 on parse/validation errors
/// with a single-line diagnostic on `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mpw

#endif
