#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace spikeclust {

template <typename... Parts>
std::string cat(Parts&&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

// Input/contract violations surface as invalid_argument; everything else
// (IO, format) as runtime_error. The CLI maps both to a one-line diagnostic.
[[noreturn]] inline void fail(const std::string& msg) {
  throw std::runtime_error(msg);
}

[[noreturn]] inline void fail_arg(const std::string& msg) {
  throw std::invalid_argument(msg);
}

}  // namespace spikeclust
