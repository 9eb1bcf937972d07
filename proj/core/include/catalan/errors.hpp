#pragma once

#include <stdexcept>
#include <string>

namespace catalan {

// Inputs outside a function's documented domain (bad pole type, non-convergent
// parameter set, malformed range, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A numeric routine could not certify the requested accuracy within its
// term/precision budget.  Callers must treat this as "no answer", never as
// a value.
class PrecisionError : public std::runtime_error {
public:
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// An integrality/denominator certificate failed on concrete data.
class CertificateError : public std::runtime_error {
public:
    explicit CertificateError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace catalan
