#pragma once

#include <stdexcept>
#include <string>

namespace e10 {

// Raised when a local-density or species computation hits a configuration
// whose rules are not covered by the supported tables (see README).
class unsupported_configuration : public std::runtime_error {
public:
    explicit unsupported_configuration(const std::string& what)
        : std::runtime_error(what) {}
};

// Raised by operations that require a nondegenerate form.
class degenerate_lattice : public std::runtime_error {
public:
    explicit degenerate_lattice(const std::string& what)
        : std::runtime_error(what) {}
};

// The standard-mass table is wired for rank 8 only.
class dimension_unsupported : public std::runtime_error {
public:
    explicit dimension_unsupported(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace e10
