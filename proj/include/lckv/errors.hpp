#pragma once

#include <stdexcept>
#include <string>

namespace lckv {

// Evaluation outside a field's chart domain (e.g. r = 0 on a punctured chart).
class DomainViolation : public std::runtime_error {
public:
    explicit DomainViolation(const std::string& what) : std::runtime_error(what) {}
};

// Loss of rank / non-positive pivot while factoring a metric.
class NumericalDegeneracy : public std::runtime_error {
public:
    explicit NumericalDegeneracy(const std::string& what) : std::runtime_error(what) {}
};

// Ill-formed geometric input (incompatible (g,J), broken model preconditions).
class StructuralError : public std::runtime_error {
public:
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// Valid request that this build deliberately does not support (e.g. 2n-dim
// quadrature grids for n != 2).
class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lckv
