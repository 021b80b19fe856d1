#ifndef ORE_ERRORS_HPP
#define ORE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ore {

/// Base class of everything this library throws on purpose.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Violated mathematical precondition (division by zero, bad bounds, ...).
class domain_error : public error {
public:
    using error::error;
};

/// Operands live in algebras that cannot be brought together.
class conversion_error : public error {
public:
    using error::error;
};

/// Operation not defined for this algebra kind or argument type.
class unsupported_error : public error {
public:
    using error::error;
};

/// Malformed operator or number text.  `position` is a 0-based byte offset.
class parse_error : public error {
public:
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

/// A recurrence unrolling hit a vanishing leading coefficient.
class singular_index_error : public error {
public:
    explicit singular_index_error(long n)
        : error("leading coefficient vanishes at index " + std::to_string(n)), index(n) {}
    long index;
};

/// Raised by the guessing engine when the search comes up empty.
class no_relation_error : public error {
public:
    enum class Cause { NoAdmissiblePoint, NoRelationFound };
    no_relation_error(const std::string& msg, Cause c) : error(msg), cause(c) {}
    Cause cause;
};

} // namespace ore

#endif
