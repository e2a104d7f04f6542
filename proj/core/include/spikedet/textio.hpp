#pragma once

#include <charconv>
#include <string>

namespace spikedet {

// Shortest decimal form that parses back to the same double, so repeated
// runs diff clean.
inline std::string fmt_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline const char* fmt_bool(bool b) { return b ? "true" : "false"; }

}  // namespace spikedet
