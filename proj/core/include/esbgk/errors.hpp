/// @file errors.hpp
/// @brief Exception types thrown by the esbgk library.

#pragma once

#include <stdexcept>
#include <string>

namespace esbgk {

/// Root-bracketing gave up before finding a sign change. Indicates an
/// implementation defect, not a valid mathematical input.
class BracketFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// All three stress eigenvalues coincide; the entropy-gap ratio is 0/0.
class DegenerateTriple : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Requested (S, P) violates the AM-GM constraint P < S^3/27.
class InfeasibleSP : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Quadrature produced a non-positive (or non-finite) mass density.
class NonPositiveDensity : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Temperature tensor is numerically singular.
class SingularTensor : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A time step drove a nodal distribution value to zero or below.
class PositivityLoss : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace esbgk
