#ifndef RELPLAN_ERRORS_H
#define RELPLAN_ERRORS_H

#include <stdexcept>
#include <string>

namespace relplan {

// Any failure caused by user-supplied input (bad PDDL, missing files,
// unsupported constructs). CLI maps these to exit code 3.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string &msg) : std::runtime_error(msg) {}
};

// Syntax or semantic error with a source position.
class ParseError : public InputError {
public:
    ParseError(int line, int column, const std::string &msg)
        : InputError("line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": " + msg),
          line(line), column(column) {}
    int line;
    int column;
};

class UnsupportedRequirementError : public InputError {
public:
    explicit UnsupportedRequirementError(const std::string &flag)
        : InputError("unsupported requirement flag " + flag), flag(flag) {}
    std::string flag;
};

} // namespace relplan

#endif
