#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace avoid {

/// Input violates an operation's precondition (wrong domain, not an avoider, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed text; `position()` is the 0-based offset of the first bad character.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Refused because the request exceeds a configured size ceiling.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A reconstruction or exact-arithmetic invariant failed. Always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace avoid
