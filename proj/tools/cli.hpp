#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hsp::cli {

enum ExitCode : int { kAllPass = 0, kFailure = 1, kUsage = 2 };

/// Runs one command; `args` excludes the program name. Output goes to
/// `out`, diagnostics to `err`.
///
///   reduce <expr> (--presentation <name> | --file <path>) [--fuel <n>]
///   verify [<suite>|--suite <suite>] [--format text|structured] [--fuel <n>]
///   rules (--presentation <name> | --file <path>)
///   critical-pairs (--presentation <name> | --file <path>) [--max-len <n>] [--format ...]
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hsp::cli
