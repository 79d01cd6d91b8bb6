#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>

namespace acm5::cli {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2 };

enum class Format { Json, Text };

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_classify(const std::string& path, Format format, bool float_mode, std::ostream& out, std::ostream& err);

struct FamilyOptions {
  std::array<std::string, 4> params;
  std::optional<std::string> emit;
  bool verify = false;
  bool identify = false;
  Format format = Format::Text;
};
int cmd_family(const FamilyOptions& opt, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace acm5::cli
