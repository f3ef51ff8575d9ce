#ifndef KZMPL_ERRORS_HPP
#define KZMPL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kzmpl {

// Malformed word / polynomial / option text.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the implemented analytic domain, truncation-order
// mismatch, non-invertible series, missing table entry, and the like.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace kzmpl

#endif
