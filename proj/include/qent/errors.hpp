#pragma once

#include <stdexcept>
#include <string>

namespace qent {

// Bad caller input: dimension mismatches, broken invariants in supplied data.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string &what) : std::runtime_error(what) {}
};

// Numerical invariant breached at run time (non-convergence, negativity
// beyond tolerance, loss of hermiticity).
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string &what) : std::runtime_error(what) {}
};

// Filesystem / stream failure.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string &what) : std::runtime_error(what) {}
};

} // namespace qent
