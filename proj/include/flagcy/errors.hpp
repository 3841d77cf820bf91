#ifndef FLAGCY_ERRORS_HPP
#define FLAGCY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace flagcy {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid user input: bad type string, node index out of range, bad weights.
struct config_error : error {
  using error::error;
};

// Structurally out of scope: spin nodes, exceptional matrix realizations.
struct unsupported_error : error {
  using error::error;
};

// Numerical or algebraic failure: singular metric, non-nilpotent input.
struct compute_error : error {
  using error::error;
};

struct io_error : error {
  using error::error;
};

}  // namespace flagcy

#endif
