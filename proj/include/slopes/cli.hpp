#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace slopes::cli {

enum ExitCode : int { kSuccess = 0, kFalse = 1, kUncertified = 2, kInputError = 3 };

struct Command {
    std::string name;
    /// Path, or "-" for the supplied stream.
    std::string input = "-";
    std::uint64_t seed = 0;
    bool oracle = false;
    /// "json" or "svg"; plot defaults to svg, everything else to json.
    std::optional<std::string> format;
};

const std::vector<std::string>& command_names();

/// Runs one command. Reports go to out as a single JSON line (or an SVG
/// document); errors go to err as a JSON object.
int run(const Command& cmd, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace slopes::cli
