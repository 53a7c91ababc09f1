#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lvmforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. Success output goes to
/// `out`; `ERROR <Name>: <detail>` lines and usage text go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lvmforge::cli
