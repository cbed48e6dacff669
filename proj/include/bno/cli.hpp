#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bno {

// Exit codes: 0 success, 1 usage error, 2 capacity/domain error,
// 3 verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bno
