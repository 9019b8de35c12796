#pragma once

#include <ostream>
#include <span>
#include <string>

namespace gbsr {

// Runs one command; `args` excludes the program name. Returns 0 on success,
// 1 on a domain error, 2 on a usage error.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gbsr
