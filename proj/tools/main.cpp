#include <cstdio>
#include <string>
#include <vector>

#include "rotsys/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const rotsys::CommandResult result = rotsys::dispatch(args);
    std::fputs(result.report.c_str(), stdout);
    return result.exit_code;
}
