#pragma once

#include <stdexcept>
#include <string>

namespace kham {

/// Parameter outside an operation's documented domain. Never clamped.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exact computation refused because the instance exceeds a configured size guard.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph / family-spec text.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class GraphErrorKind {
    UnbalancedPartition,
    IntraPartEdge,
    SelfLoop,
    VertexOutOfRange,
    BadPartIndex,
};

const char* to_string(GraphErrorKind kind);

/// A graph description that violates a KPartiteGraph invariant.
class GraphError : public std::invalid_argument {
public:
    GraphError(GraphErrorKind kind, const std::string& what)
        : std::invalid_argument(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    GraphErrorKind kind() const noexcept { return kind_; }

private:
    GraphErrorKind kind_;
};

} // namespace kham
