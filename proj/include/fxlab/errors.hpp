#pragma once

#include <stdexcept>
#include <string>

namespace fxlab {

// Bad or insufficient input data (files, series, configs). CLI exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure: domain violations, rank deficiency, singular configurations.
// CLI exit code 3.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace fxlab
