/// @file scalar_analysis.hpp
/// @brief One-variable analysis of the optimal entropy-production coefficient.
///
/// C_nu is the supremum over x > 0 of the log-ratio
///
///     g1(nu,x)   3 ln(1+x/3) - ln(1+(1+2nu)x/3) - 2 ln(1+(1-nu)x/3)
///     -------- = --------------------------------------------------
///      g2(x)             3 ln(1+x/3) - ln(1+x)
///
/// for nu in [-1/2, 1). The supremum is 0 at nu = 0, the unattained limit
/// 1/2 at nu = -1/2, and otherwise is attained at the unique interior
/// stationary point x_nu where g1/g2 crosses g1'/g2'. compute_cnu dispatches
/// the two closed cases analytically and locates x_nu by bracketed
/// Newton/bisection on phi(x) = g2*g1' - g1*g2'.

#pragma once

#include <span>
#include <vector>

#include "esbgk/prandtl.hpp"

namespace esbgk::scalar {

/// Where the supremum of g1/g2 lives.
enum class Maximizer {
    kZero,       ///< nu = 0: the ratio is identically zero.
    kInterior,   ///< attained at the finite stationary point x_nu > 0
    kAtInfinity, ///< nu = -1/2: the sup is the limit 1/2, not attained
};

struct CnuResult {
    double value = 0.0;        ///< C_nu in [0, 1)
    Maximizer maximizer = Maximizer::kZero;
    double x_nu = -1.0;        ///< stationary point; -1 sentinel unless kInterior
    double closed_bound = 0.0; ///< nu^2 (5 - 2 nu) / 3
    double legacy_bound = 0.0; ///< max(-2 nu, nu)
    double residual = 0.0;     ///< phi(x_nu); 0 for the analytic cases
    double grid_sup = 0.0;     ///< cross-check sup of g1/g2 over a log-spaced grid
};

/// Numerator of the ratio. Zero at x = 0; nonnegative for x >= 0.
double g1(const PrandtlParam& p, double x);

/// Denominator of the ratio. Zero at x = 0; strictly positive for x > 0.
double g2(double x);

/// g1/g2 with the nu = 0 and x = 0 conventions (both return 0).
double g_ratio(const PrandtlParam& p, double x);

/// Closed-form derivative (2 nu^2 x/3) / [(1+x/3)(1+(1+2nu)x/3)(1+(1-nu)x/3)].
double g1_prime(const PrandtlParam& p, double x);

/// Closed-form derivative (2x/3) / [(1+x/3)(1+x)].
double g2_prime(double x);

/// g1'/g2' in its cancelled rational form nu^2 (1+x) / [(1+(1+2nu)x/3)(1+(1-nu)x/3)].
double derivative_ratio(const PrandtlParam& p, double x);

/// Stationary point sqrt((4+2nu)/(1+2nu)) - 1 of derivative_ratio.
/// Only defined for nu in (-1/2, 0) u (0, 1); throws std::domain_error otherwise.
double x_star(const PrandtlParam& p);

/// Upper bound nu^2 (5 - 2 nu) / 3 on C_nu; strictly below 1 on [-1/2, 1).
double closed_bound(const PrandtlParam& p);

/// The older coefficient max(-2 nu, nu); equals 1 at nu = -1/2.
double legacy_bound(const PrandtlParam& p);

/// The root-condition residual phi(x) = g2(x) g1'(x) - g1(x) g2'(x).
/// Positive on (0, x_nu), zero at x_nu, negative beyond.
double phi(const PrandtlParam& p, double x);

/// Computes C_nu. `tol` is the absolute x tolerance of the root search
/// (the residual is additionally driven below 1e-12). Throws BracketFailure
/// if no sign change of phi is found below x = 1e12.
CnuResult compute_cnu(const PrandtlParam& p, double tol = 1e-10);

/// One row of the pointwise product-form check of the closed bound:
///   (1+(1+2nu)x/3)(1+(1-nu)x/3)^2  >=  (1+x)^B (1+x/3)^{3(1-B)},
/// with B = closed_bound(nu). Margins are evaluated in log space, so the
/// nu = 0 equality case comes out exactly zero.
struct ProductMargin {
    double x = 0.0;
    double margin = 0.0;     ///< LHS - RHS
    double rel_margin = 0.0; ///< (LHS - RHS) / LHS
};

struct ProductInequalityReport {
    std::vector<ProductMargin> margins;
    double min_margin = 0.0;
    double min_rel_margin = 0.0;
    double argmin_x = 0.0;

    /// True when every margin satisfies LHS - RHS >= -rel_tol * LHS.
    bool all_nonnegative(double rel_tol = 1e-12) const {
        return min_rel_margin >= -rel_tol;
    }
};

ProductInequalityReport verify_product_inequality(const PrandtlParam& p,
                                                  std::span<const double> xs);

} // namespace esbgk::scalar
