#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wpss {

// Base class for every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text input. `position` is a 0-based byte offset into the
// parsed text (or line-relative, as documented by the throwing function).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Well-formed input that violates a structural requirement.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Fewer than t distinct participants were supplied.
class ThresholdError : public Error {
public:
    ThresholdError(std::size_t supplied, std::size_t threshold)
        : Error("below threshold: " + std::to_string(supplied) +
                " distinct share(s) supplied, t = " + std::to_string(threshold)),
          supplied_(supplied),
          threshold_(threshold) {}

    std::size_t supplied() const noexcept { return supplied_; }
    std::size_t threshold() const noexcept { return threshold_; }

private:
    std::size_t supplied_;
    std::size_t threshold_;
};

// Shares or messages that contradict each other, or a dealer-produced word
// that the engine cannot decide within the advertised budget.
class IntegrityError : public Error {
public:
    using Error::Error;
};

// An engine ran out of its work budget where a decision was mandatory.
class BudgetError : public Error {
public:
    using Error::Error;
};

}  // namespace wpss
