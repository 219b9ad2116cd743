#pragma once

#include <string>
#include <vector>

namespace rotsys {

// Exit codes: 0 success, 1 property failure (pattern absent, coloring or
// certificate failed, audit/discharge check failed, reducible hit found),
// 2 usage or parse error, 3 budget exceeded. Identical inputs produce
// byte-identical reports.
struct CommandResult {
    int exit_code = 0;
    std::string report;
};

CommandResult dispatch(const std::vector<std::string>& args);

}  // namespace rotsys
