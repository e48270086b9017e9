#ifndef ZFILT_ERRORS_HPP
#define ZFILT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zfilt {

// Precondition violated by the caller (order mismatch, bad family parameters, ...).
struct contract_error : std::invalid_argument {
    explicit contract_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Series with zero constant term passed where a unit is required.
struct invertibility_error : std::domain_error {
    explicit invertibility_error(const std::string& msg) : std::domain_error(msg) {}
};

// Input data is structurally valid but mathematically inconsistent
// (non-integral Mobius inversion, negative dimension, ...).
struct data_error : std::runtime_error {
    explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Enumeration budget exceeded.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace zfilt

#endif
