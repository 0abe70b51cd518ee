#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sepscope {

// Bad caller input: out-of-range vertex, loop edge, invalid parameter.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed serialized graph; carries the byte offset of the first offending byte.
struct parse_error : std::runtime_error {
    std::size_t offset;
    parse_error(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

// Instance exceeds the hard size cap of an exact routine.
struct capability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Search budget exhausted before a definite answer; never a wrong answer.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A generated graph violates one of its family axioms; message names the axiom.
struct construction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace sepscope
