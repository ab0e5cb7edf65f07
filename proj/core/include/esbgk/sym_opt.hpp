/// @file sym_opt.hpp
/// @brief Three-variable entropy-gap functional and its reduction chain.
///
/// f_nu(theta) is the ratio of Gaussian entropy gaps expressed through the
/// stress eigenvalues. Its supremum over non-degenerate positive triples
/// equals C_nu; the route goes through the range of Delta = xy + yz + zx at
/// fixed sum S and product P (sp_range), the two-equal-coordinate reduction
/// (reduce_to_two), and finally the one-variable ratio of scalar_analysis.

#pragma once

#include <array>

#include "esbgk/prandtl.hpp"
#include "esbgk/rng.hpp"

namespace esbgk::symopt {

/// Positive eigenvalue triple of a stress tensor.
struct EigenTriple {
    std::array<double, 3> theta{};

    EigenTriple() = default;
    EigenTriple(double t1, double t2, double t3);

    double sum() const { return theta[0] + theta[1] + theta[2]; }
    double pair_sum() const {
        return theta[0] * theta[1] + theta[1] * theta[2] + theta[2] * theta[0];
    }
    double product() const { return theta[0] * theta[1] * theta[2]; }

    /// Spread max_ij |theta_i - theta_j|.
    double spread() const;

    EigenTriple sorted_descending() const;
};

/// Range of Delta = xy + yz + zx over positive (x, y, z) with fixed
/// x + y + z = S and xyz = P. alpha and beta are the two roots of
/// t^2 - t^3 = k, k = 4P/S^3, in (0, 2/3) and (2/3, 1).
struct SPRange {
    double S = 0.0;
    double P = 0.0;
    double k = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double delta_min = 0.0;
    double delta_max = 0.0;
    EigenTriple argmin; ///< (S a/2, S a/2, S(1-a)); distinct coordinate largest
    EigenTriple argmax; ///< (S b/2, S b/2, S(1-b)); distinct coordinate smallest
};

/// Entropy-gap ratio through the eigenvalues. Scale and permutation
/// invariant. Throws DegenerateTriple when the spread is below 1e-12 * S.
double f_nu(const PrandtlParam& p, const EigenTriple& t);

/// Solves the fixed-(S, P) range problem. Throws InfeasibleSP when
/// P >= S^3/27.
SPRange sp_range(double S, double P);

/// The Delta-minimizing triple of t's (S, P) class, largest coordinate
/// first. f_nu never decreases under this map.
EigenTriple reduce_to_two(const PrandtlParam& p, const EigenTriple& t);

/// Uniform draw from the (S, P) fiber: the largest-coordinate parameter z
/// is sampled in its feasible interval and the companion pair solved from
/// the residual quadratic.
EigenTriple sample_feasible_triple(const SPRange& r, Rng& rng);

/// Log-spaced grid over ratio coordinates (theta1/theta3, theta2/theta3).
struct RatioGridSpec {
    int n1 = 400;
    int n2 = 400;
    double ratio_min = 1e-4;
    double ratio_max = 1e4;
};

/// Supremum of f_nu over the ratio grid (theta3 = 1 by scale invariance).
/// Degenerate grid points are skipped.
double brute_force_sup(const PrandtlParam& p, const RatioGridSpec& spec);

} // namespace esbgk::symopt
