#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace losslab::cli {

/// File create/rename failure; maps to exit code 3.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Runs one command: args are the argv entries after the program name.
/// Diagnostics and reports go to `out`/`err`.
/// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace losslab::cli
