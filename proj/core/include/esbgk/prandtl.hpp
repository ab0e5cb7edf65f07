/// @file prandtl.hpp
/// @brief Prandtl parameter nu and the collision-frequency exponents.

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace esbgk {

/// Model parameters: the Prandtl knob nu in the temperature tensor
/// (1-nu)*T*I + nu*Theta, plus the collision-frequency exponents in
/// A_nu = rho^alpha * T^beta / (1-nu).
///
/// nu = 0 recovers classical BGK; nu = -1/2 yields the physically correct
/// Prandtl number. Valid range is -1/2 <= nu < 1.
class PrandtlParam {
public:
    explicit PrandtlParam(double nu, double alpha = 0.0, double beta = 0.0)
        : nu_(nu), alpha_(alpha), beta_(beta) {
        if (!(nu >= -0.5 && nu < 1.0)) {
            throw std::invalid_argument("PrandtlParam: nu must lie in [-1/2, 1), got " +
                                        std::to_string(nu));
        }
        if (!(alpha >= 0.0) || !(beta >= 0.0)) {
            throw std::invalid_argument("PrandtlParam: alpha and beta must be >= 0");
        }
    }

    double nu() const { return nu_; }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }

    /// Collision frequency A_nu = rho^alpha * T^beta / (1 - nu).
    double collision_frequency(double rho, double T) const {
        return std::pow(rho, alpha_) * std::pow(T, beta_) / (1.0 - nu_);
    }

private:
    double nu_;
    double alpha_;
    double beta_;
};

} // namespace esbgk
