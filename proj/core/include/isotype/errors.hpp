#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isotype {

// An element (or literal) whose shape does not match the order expression
// it is used with.
class ShapeError : public std::invalid_argument {
public:
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised by the grammar parsers; carries the offset of the offending
// character and a description of what was expected there.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& expected, const std::string& input)
        : std::runtime_error(format(position, expected, input)),
          position_(position),
          expected_(expected) {}

    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    static std::string format(std::size_t position, const std::string& expected,
                              const std::string& input) {
        return "parse error at position " + std::to_string(position) + ": expected " + expected +
               " in \"" + input + "\"";
    }

    std::size_t position_;
    std::string expected_;
};

// The duplicator has no reply preserving the order pattern and truncated
// distances; signals that the two positions were not sufficiently equivalent.
class StrategyFailure : public std::runtime_error {
public:
    explicit StrategyFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace isotype
