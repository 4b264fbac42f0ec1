#pragma once

// Minimal popen wrapper for driving the CLI binary from tests.

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace proc {

struct Result {
  int exit_code = -1;
  std::string output;  // stdout only
};

inline Result run(const std::string& command) {
  Result res;
  std::string wrapped = command + " 2>/dev/null";
  FILE* pipe = popen(wrapped.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), got);
  int status = pclose(pipe);
  res.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return res;
}

inline std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'')
      out += "'\\''";
    else
      out += c;
  }
  out += "'";
  return out;
}

}  // namespace proc
