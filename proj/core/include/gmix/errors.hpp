#pragma once

#include <stdexcept>
#include <string>

namespace gmix {

// Component has (numerically) zero within-component variance.
struct DegenerateComponentError : std::runtime_error {
    explicit DegenerateComponentError(const std::string& msg)
        : std::runtime_error(msg) {}
};

// No allocation satisfies the min-count constraint (N < m*K).
struct InfeasibleError : std::runtime_error {
    explicit InfeasibleError(const std::string& msg)
        : std::runtime_error(msg) {}
};

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& msg)
        : std::runtime_error(msg) {}
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, long line)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ")"),
          line_number(line) {}
    long line_number;
};

}  // namespace gmix
