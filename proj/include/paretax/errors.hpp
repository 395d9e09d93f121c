#pragma once

#include <stdexcept>
#include <string>

namespace paretax {

// Base class for everything thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An argument lies outside the mathematical domain of an operation.
class domain_error : public error {
public:
    using error::error;
};

// The aggregates cannot describe a Pareto tail (would force gamma <= 2),
// or a levy exceeds what the capital class can bear.
class infeasible_error : public error {
public:
    using error::error;
};

// Malformed input text. Carries the 1-based line number where parsing failed.
class parse_error : public error {
public:
    parse_error(std::size_t line, const std::string& what)
        : error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// A fit cannot be produced from the given data.
class estimation_error : public error {
public:
    using error::error;
};

// Invalid simulation configuration.
class config_error : public error {
public:
    using error::error;
};

}  // namespace paretax
