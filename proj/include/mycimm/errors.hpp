#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mycimm {

// Bad data handed to an operation: malformed JSON, out-of-range vertex ids,
// violated preconditions. The CLI maps these to exit code 1.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed graph6 text. Carries the byte offset of the first bad byte.
class Graph6ParseError : public InputError {
public:
    Graph6ParseError(const std::string& what, std::size_t offset)
        : InputError(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// A structural assertion that should be unreachable failed.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace mycimm
