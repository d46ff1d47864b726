#pragma once

#include <stdexcept>
#include <string>

namespace ewens {

// Request is well-formed but outside what this build can do
// (e.g. exhaustive enumeration beyond the size cap).
class capability_error : public std::runtime_error {
 public:
  explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ewens
