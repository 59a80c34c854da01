#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wsg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitOracleMismatch = 3;

inline constexpr int kFormatVersion = 1;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wsg::cli
