#pragma once

#include <stdexcept>
#include <string>

namespace rotsys {

// Structural problem in an input graph or assignment.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Text input that does not conform to a file format. Carries the 1-based line.
struct ParseError : ValidationError {
    ParseError(int line_, const std::string& msg)
        : ValidationError("line " + std::to_string(line_) + ": " + msg), line(line_) {}
    int line;
};

// An exact search ran into its configured work budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// A certificate that is expected to hold failed to verify.
struct CertificationError : std::runtime_error {
    explicit CertificationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace rotsys
