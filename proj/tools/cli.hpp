#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hcob/abelian_group.hpp"

namespace hcob::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kStageFailed = 1;
inline constexpr int kUsage = 2;

/// Runs the command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Named coefficient groups: factors "z" or "zN" joined by 'x', then "-trivial" or "-sign";
/// "zero" is the trivial group. Examples: z2-trivial, z2xz2-sign, zxz-trivial.
/// Throws std::invalid_argument for an unknown name.
InvolutiveAbelianGroup parse_target(const std::string& name);

}  // namespace hcob::cli
