#ifndef GOALCLUST_ERROR_HPP
#define GOALCLUST_ERROR_HPP

#include <stdexcept>
#include <string>

namespace goalclust {

/// Bad arguments or violated preconditions supplied by the caller.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed, degenerate, or otherwise unusable input data.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// A solver could not produce a valid result.
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace goalclust

#endif // GOALCLUST_ERROR_HPP
