#pragma once

#include <stdexcept>
#include <string>

namespace linfty {

// Error taxonomy shared with the CLI exit codes:
//   parse_error -> 2, domain_error -> 3, internal_error -> 4.

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an internal consistency assertion fails (e.g. a residue that
// should reduce to zero does not). Indicates a bug, not bad user input.
class internal_error : public std::runtime_error {
public:
    explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace linfty
