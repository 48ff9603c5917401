#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace malalgo {

// Parse failure with the offending position and what was expected there.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::size_t position, std::string expected)
        : std::runtime_error("syntax error at position " + std::to_string(position) +
                             ": expected " + expected),
          position_(position),
          expected_(std::move(expected)) {}

    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

class NonlinearError : public std::runtime_error {
public:
    explicit NonlinearError(const std::string& what)
        : std::runtime_error("nonlinear expression: " + what) {}
};

class AlreadySolvedError : public std::runtime_error {
public:
    AlreadySolvedError() : std::runtime_error("equation is already in solved form") {}
};

// Raised when a step would divide by a zero coefficient; callers map this
// to the NoSolution / AllReals sentinels.
class DegenerateDivisionError : public std::runtime_error {
public:
    DegenerateDivisionError() : std::runtime_error("division by zero coefficient") {}
};

class NotApplicableError : public std::runtime_error {
public:
    explicit NotApplicableError(const std::string& what)
        : std::runtime_error("not applicable: " + what) {}
};

class SiteNeverReachedError : public std::runtime_error {
public:
    explicit SiteNeverReachedError(const std::string& what)
        : std::runtime_error("rewrite site never reached: " + what) {}
};

class GenerationExhaustedError : public std::runtime_error {
public:
    explicit GenerationExhaustedError(const std::string& what)
        : std::runtime_error("generation exhausted: " + what) {}
};

class FormatError : public std::runtime_error {
public:
    FormatError(std::size_t line, const std::string& what)
        : std::runtime_error("format error at line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class UnknownIdError : public std::runtime_error {
public:
    explicit UnknownIdError(const std::string& id)
        : std::runtime_error("unknown record id: " + id) {}
};

}  // namespace malalgo
