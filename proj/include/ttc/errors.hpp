#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ttc {

/// Operand dimensions do not conform.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A scalar or configuration argument is outside its admissible range.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A dense factorization failed. `slice()` is the frontal slice index, or -1.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, long slice = -1)
        : std::runtime_error(what), slice_(slice) {}
    long slice() const noexcept { return slice_; }

private:
    long slice_;
};

/// A matrix expected to have full column rank does not.
class SingularityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or truncated file. `offset()` is the byte where parsing failed.
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& what, std::size_t offset)
        : std::runtime_error(what), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// The rank-constrained generator ran out of iterations or restarts.
/// `ratios()` holds the last tube-norm ratio for each transform involved.
class GeneratorError : public std::runtime_error {
public:
    GeneratorError(const std::string& what, std::vector<double> ratios)
        : std::runtime_error(what), ratios_(std::move(ratios)) {}
    const std::vector<double>& ratios() const noexcept { return ratios_; }

private:
    std::vector<double> ratios_;
};

}  // namespace ttc
