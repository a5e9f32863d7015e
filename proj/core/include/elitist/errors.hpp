#pragma once

#include <stdexcept>
#include <string>

namespace elitist {

// Thrown when a request exceeds a configured size cap (sieve limit,
// Pepin bit cap). Distinct from std::invalid_argument so callers can map
// it to a different exit code.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace elitist
