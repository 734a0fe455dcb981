#ifndef BPLAB_ERRORS_HPP
#define BPLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bplab {

struct BadArgs : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotIndependent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidPartition : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedWitness : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotInFkPrime : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotBelowP0 : std::domain_error {
    using std::domain_error::domain_error;
};

struct DivergentSum : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoFeasiblePair : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// input text errors carry the byte offset of the offending token
struct ParseError : std::runtime_error {
    std::size_t byte_offset;
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          byte_offset(offset) {}
};

} // namespace bplab

#endif
