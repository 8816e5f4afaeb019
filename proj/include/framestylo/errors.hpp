#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace framestylo {

// Inputs violate an operation's preconditions (bad dimensions, bad values).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A file cannot be read, decoded or written.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// File contents cannot be parsed; carries the offending line number.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t line)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ")"), line_number(line) {}

    std::size_t line_number;
};

} // namespace framestylo
