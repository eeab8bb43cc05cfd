#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace etaq {

// Raised when an evaluation is requested outside a theorem's hypotheses
// (wrong sign of delta1, inadmissible quotient, n out of range). The message
// names the violated precondition.
class hypothesis_error : public std::runtime_error {
public:
    explicit hypothesis_error(const std::string& what_arg)
        : std::runtime_error(what_arg) {}
};

// Raised by the quotient-descriptor parser. position() is the 0-based byte
// offset of the offending token in the input text.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what_arg, std::size_t position)
        : std::runtime_error(what_arg), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace etaq
