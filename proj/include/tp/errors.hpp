#pragma once

#include <stdexcept>
#include <string>

namespace tp {

// A graph or join would exceed the word-width vertex capacity.
struct capacity_error : std::length_error {
    using std::length_error::length_error;
};

// An operation precondition was violated (bad degree, missing edge, ...).
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A text/JSON input could not be parsed; carries the 1-based line number.
struct parse_error : std::runtime_error {
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

// An enumeration was refused because its work estimate exceeds the cap.
struct oracle_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace tp
