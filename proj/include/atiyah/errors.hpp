#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace atiyah {

struct CoincidentPoints : std::runtime_error {
    std::size_t first, second;
    CoincidentPoints(std::size_t i, std::size_t j)
        : std::runtime_error("coincident points at indices " + std::to_string(i) +
                             ", " + std::to_string(j)),
          first(i), second(j) {}
};

// Requested lift direction sits at the south pole (lambda == 0); the reversed
// direction must be lifted instead.
struct DegenerateLift : std::domain_error {
    DegenerateLift() : std::domain_error("degenerate lift: lambda = 0") {}
};

struct NonAscendingInput : std::invalid_argument {
    explicit NonAscendingInput(const std::string& what)
        : std::invalid_argument(what) {}
};

struct DegenerateStart : std::runtime_error {
    explicit DegenerateStart(const std::string& what)
        : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(std::size_t line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
          line(line_no) {}
};

}  // namespace atiyah
