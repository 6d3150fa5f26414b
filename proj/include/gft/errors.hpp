#pragma once

#include <stdexcept>
#include <string>

namespace gft {

// Requested a series power g^alpha with g(0) != 1. The recurrence assumes a
// unit constant term (principal branch).
struct NonUnitConstantTerm : std::invalid_argument {
    explicit NonUnitConstantTerm(const std::string& what) : std::invalid_argument(what) {}
};

// The reciprocal expansion 1/(1+z*phi) shows non-decaying tail coefficients at
// the working order, i.e. the realized phi is not bounded by 1 on the disk.
struct InversionDivergence : std::runtime_error {
    explicit InversionDivergence(const std::string& what) : std::runtime_error(what) {}
};

// Atom weights are not a probability measure.
struct BadMeasure : std::invalid_argument {
    explicit BadMeasure(const std::string& what) : std::invalid_argument(what) {}
};

// Parameter outside its documented domain (radius, class parameters, ...).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace gft
