#pragma once

#include <stdexcept>
#include <string>

namespace unirank {

// Raised when an exactness invariant is violated (e.g. a division that the
// caller asserted to be exact leaves a remainder).  Distinct from usage
// errors: it signals a wrongly assembled series, not a bad argument.
class integrity_error : public std::runtime_error {
public:
    explicit integrity_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a numeric routine fails to converge; carries diagnostics.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace unirank
