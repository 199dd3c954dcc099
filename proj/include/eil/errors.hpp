#ifndef EIL_ERRORS_HPP
#define EIL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eil {

// Malformed textual input (graph files, JSON, CLI specs). Carries the
// 1-based line number when one is meaningful, 0 otherwise.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// A computation was refused because the input exceeds a configured size
// cutoff (e.g. the Betti-table vertex cutoff).
class cutoff_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal consistency check failed.  These are never expected to fire;
// they indicate a bug, so they must not be caught and "corrected".
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace eil

#endif
