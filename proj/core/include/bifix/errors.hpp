#pragma once

#include <stdexcept>
#include <string>

namespace bifix {

/// Base class of every error thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid arguments: malformed automata, mismatched alphabets, values
/// outside a function's documented domain.
class input_error : public error {
public:
    using error::error;
};

/// Text-format errors; carries the 1-based line where parsing stopped.
class parse_error : public input_error {
public:
    parse_error(int line, const std::string& what)
        : input_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// A computation that is well defined but empty/undefined for the given
/// value (e.g. asking for the complexity of an atom that does not exist).
class domain_error : public error {
public:
    using error::error;
};

/// A configured cap (state count, semigroup elements, memory) was exceeded.
class resource_error : public error {
public:
    using error::error;
};

/// Randomized generation gave up after the configured number of retries.
class generation_error : public error {
public:
    using error::error;
};

} // namespace bifix
