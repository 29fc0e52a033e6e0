#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace horn {

/// Two sequences or partitions were required to have the same length.
class RankMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A tableau or partition does not have the shape an operation requires.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed textual input. `position()` is the 0-based offset of the
/// offending character.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// The eigensolver hit its sweep cap.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace horn
