#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "foliage/cli/case_file.hpp"

namespace foliage {

enum ExitCode { ExitOk = 0, ExitInput = 1, ExitIdentity = 2, ExitInternal = 3 };

// Command line settings; set fields override the case file's options.
struct CommandOptions {
  std::optional<ChiMode> mode;
  std::optional<std::uint64_t> seed;
  std::optional<int> max_depth;
  std::optional<std::vector<std::string>> checks;
  bool json = false;
  std::string dot_path;
};

AnalyzeOptions effective_options(const CaseFile& c, const CommandOptions& opts);

// Each writes to `out` and returns an exit code; exceptions propagate.
int cmd_analyze(const CaseFile& c, const CommandOptions& opts, std::ostream& out);
int cmd_reduce(const CaseFile& c, const CommandOptions& opts, std::ostream& out);
int cmd_intersect(const std::string& f, const std::string& g, const CommandOptions& opts, std::ostream& out);
int cmd_check(const CaseFile& c, const CommandOptions& opts, std::ostream& out);

struct Invocation {
  std::string command;  // analyze, reduce, intersect or check
  std::string case_path;
  std::string f, g;
  CommandOptions options;
};

// Runs a command and maps exceptions to exit codes, with a message on `err`.
int run_command(const Invocation& inv, std::ostream& out, std::ostream& err);

}  // namespace foliage
