#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sspr {

/// Problem with user-supplied data (bad file contents, empty input, invalid value).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed record in an input stream; carries the 1-based record index.
class ParseError : public InputError {
public:
    ParseError(std::size_t record, const std::string& what)
        : InputError("record " + std::to_string(record) + ": " + what), record_(record) {}

    std::size_t record() const noexcept { return record_; }

private:
    std::size_t record_;
};

/// Request exceeds a hard size limit (exact solvers, oracles, graph caps).
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sspr
