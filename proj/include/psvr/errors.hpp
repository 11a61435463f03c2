#ifndef PSVR_ERRORS_HPP
#define PSVR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace psvr {

// Bad user-supplied data: nonpositive targets, dimension mismatches,
// unreadable files. Maps to the input-error exit code in the CLI.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A solver invariant failed. Carries enough context to reproduce.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

// Malformed model or CSV file; message carries line/field diagnostics.
class parse_error : public input_error {
public:
    explicit parse_error(const std::string& msg) : input_error(msg) {}
};

}  // namespace psvr

#endif
