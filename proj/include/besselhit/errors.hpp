#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace besselhit {

// Argument outside the mathematical domain of a function (z <= 0, b >= a, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Configuration or parameter rejected by a precondition (p >= 1 + nu, odd order, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// Numerical procedure could not certify its own result, e.g. the
// Gaver-Stehfest order ladder disagrees.
class InstabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Short rendering of a number for diagnostics.
inline std::string brief(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace besselhit
