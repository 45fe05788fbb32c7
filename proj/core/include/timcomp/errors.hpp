#ifndef TIMCOMP_ERRORS_HPP
#define TIMCOMP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace timcomp {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/**
 * Malformed topology input. `kind` identifies the failure, `index` is the
 * offending row or column in 1-based numbering (0 when not applicable).
 */
class ParseError : public Error {
public:
    enum class Kind {
        kMissingSize,      // first line is not a positive integer
        kRowCount,         // wrong number of matrix rows
        kRowLength,        // a row with != K characters
        kBadCharacter,     // a character outside {0,1}
        kEmptyRow,         // receiver with no connected transmitter
        kEmptyColumn,      // transmitter with no connected receiver
    };

    ParseError(Kind kind, int index, const std::string& what)
        : Error(what), kind(kind), index(index) {}

    Kind kind;
    int index;
};

/// A combinatorial size guard was exceeded (operation refused, not wrong).
class GuardError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed; callers should treat this as a bug.
class InvariantError : public Error {
public:
    using Error::Error;
};

}  // namespace timcomp

#endif  // TIMCOMP_ERRORS_HPP
