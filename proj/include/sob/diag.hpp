#pragma once

#include <stdexcept>
#include <string>

#include "sob/ast.hpp"

namespace sob {

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(SourceLoc loc, const std::string& msg)
        : std::runtime_error("syntax error at " + std::to_string(loc.line) + ":" +
                             std::to_string(loc.col) + ": " + msg),
          loc(loc) {}
    SourceLoc loc;
};

class ResolutionError : public std::runtime_error {
public:
    ResolutionError(SourceLoc loc, const std::string& name, const std::string& msg)
        : std::runtime_error("resolution error at " + std::to_string(loc.line) + ":" +
                             std::to_string(loc.col) + ": " + msg),
          loc(loc), name(name) {}
    SourceLoc loc;
    std::string name; // the unresolved method, class or variable
};

// Runtime evaluation failures: unbound variables and type mismatches.
class EvalError : public std::runtime_error {
public:
    enum Kind { UnboundVariable, TypeMismatch };
    EvalError(Kind kind, const std::string& msg)
        : std::runtime_error(msg), kind(kind) {}
    Kind kind;
};

// Internal engine failures: invalid step choices and broken configuration
// invariants (double resolve, missing registry entries).
class EngineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sob
