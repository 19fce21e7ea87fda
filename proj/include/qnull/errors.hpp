#ifndef QNULL_ERRORS_HPP
#define QNULL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qnull {

/// Base class for all library failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or out-of-contract input (bad file, bad dimension, off-space point).
class InputError : public Error {
public:
    explicit InputError(const std::string& msg) : Error(msg) {}
};

/// Sampling too coarse for a safe answer. Raised instead of guessing.
class MeshError : public Error {
public:
    explicit MeshError(const std::string& msg) : Error(msg) {}
};

} // namespace qnull

#endif
