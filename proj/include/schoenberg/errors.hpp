#pragma once

#include <stdexcept>
#include <string>

namespace schoenberg {

// Eigenvalue or quadrature iteration failed to converge. Callers must
// report this; it is never downgraded to a best-effort result.
class NumericalError : public std::runtime_error {
  public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace schoenberg
