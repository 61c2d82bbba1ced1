#ifndef CGC_ERRORS_HPP
#define CGC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cgc {

/// Base class for all errors raised by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed graph input. Carries the 1-based line number when known.
class parse_error : public error {
public:
    parse_error(const std::string& what, int line = 0)
        : error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// A precondition of an operation was violated (bad ordering, disconnected
/// input, colouring not proper, ...).
class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(what) {}
};

/// A search exceeded its node or wall-clock budget. Solvers never return
/// approximate answers; exceeding the budget is always an error.
class budget_error : public error {
public:
    explicit budget_error(const std::string& what) : error(what) {}
};

} // namespace cgc

#endif // CGC_ERRORS_HPP
