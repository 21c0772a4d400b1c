#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace catalan {

// Base of every error the library reports for bad input.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Broken internal invariant. Never caused by user input that passed validation.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class sequence_fault { bad_symbol, odd_length, prefix_violation, count_mismatch };

// A binary word that is not a Catalan sequence. `position` is the 1-based
// index of the offending symbol or prefix (0 when the fault is global).
class sequence_error : public error {
public:
    sequence_error(sequence_fault fault, std::size_t position, const std::string& what)
        : error(what), fault_(fault), position_(position) {}

    sequence_fault fault() const noexcept { return fault_; }
    std::size_t position() const noexcept { return position_; }

private:
    sequence_fault fault_;
    std::size_t position_;
};

enum class parse_fault { syntax, stack_underflow, excess_operands };

// Malformed family text. `position` is 1-based.
class parse_error : public error {
public:
    parse_error(parse_fault fault, std::size_t position, const std::string& what)
        : error(what), fault_(fault), position_(position) {}

    parse_fault fault() const noexcept { return fault_; }
    std::size_t position() const noexcept { return position_; }

private:
    parse_fault fault_;
    std::size_t position_;
};

// Object that parses but breaks its family's invariants (crossing chords,
// malformed triangulation, size mismatch, path crossing the diagonal).
class invariant_error : public error {
public:
    using error::error;
};

// Index or size argument outside the supported range.
class range_error : public error {
public:
    using error::error;
};

// Valid sequence outside the image of a partial codec.
class not_in_image : public error {
public:
    using error::error;
};

namespace detail {

inline void check(bool condition, const char* message) {
    if (!condition) throw internal_error(message);
}

} // namespace detail

} // namespace catalan
