#pragma once

// Runs the rotwidth executable (path from ROTWIDTH_CLI) through a shell and
// captures stdout, optionally merged with stderr.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace rotwidth::testing {

struct CliRun {
  int status = -1;
  std::string out;
};

inline CliRun run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd =
      std::string(ROTWIDTH_CLI) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace rotwidth::testing
