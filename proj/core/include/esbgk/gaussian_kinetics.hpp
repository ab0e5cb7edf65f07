/// @file gaussian_kinetics.hpp
/// @brief Moments, ellipsoidal Gaussians, entropies, and entropy production.
///
/// All integrals are midpoint-rule sums over a VelocityGrid; Gaussian decay
/// makes the rule spectrally accurate once the grid reaches ~8 standard
/// deviations. Closed-form Gaussian entropies provide the independent route
/// against which the quadrature is checked.

#pragma once

#include <array>
#include <utility>
#include <vector>

#include "esbgk/mat3.hpp"
#include "esbgk/prandtl.hpp"
#include "esbgk/rng.hpp"
#include "esbgk/velocity_grid.hpp"

namespace esbgk::kinetics {

/// Macroscopic state (rho, U, Theta) with derived temperature and stress
/// eigenvalues. Theta is symmetrized and must be positive-definite.
class MomentState {
public:
    MomentState(double rho, const Vec3& U, const Mat3& Theta);

    double rho() const { return rho_; }
    const Vec3& U() const { return U_; }
    const Mat3& Theta() const { return Theta_; }
    /// T = trace(Theta)/3.
    double T() const { return T_; }
    /// Stress eigenvalues, descending: theta1 >= theta2 >= theta3 > 0.
    const std::array<double, 3>& eigenvalues() const { return eig_; }

private:
    double rho_;
    Vec3 U_;
    Mat3 Theta_;
    double T_;
    std::array<double, 3> eig_;
};

/// Temperature tensor (1-nu) T I + nu Theta. Accepts the closed interval
/// [-1/2, 1]: nu = 1 is the stress Gaussian M_1 used for initial data and
/// entropy gaps, even though the relaxation model itself requires nu < 1.
Mat3 temperature_tensor(double nu, const MomentState& m);

/// Pointwise Gaussian evaluator rho / sqrt(det(2 pi Sigma)) *
/// exp(-(v-U)^T Sigma^{-1} (v-U) / 2).
class EllipsoidalGaussian {
public:
    /// Throws SingularTensor if det(cov) < 1e-30.
    static EllipsoidalGaussian from_covariance(double rho, const Vec3& U, const Mat3& cov);

    double operator()(double vx, double vy, double vz) const {
        const Vec3 d{vx - U_.x, vy - U_.y, vz - U_.z};
        return std::exp(log_norm_ - 0.5 * cov_inv_.quadform(d));
    }

    double rho() const { return rho_; }
    const Vec3& U() const { return U_; }
    const Mat3& covariance() const { return cov_; }

private:
    double rho_ = 0.0;
    Vec3 U_;
    Mat3 cov_;
    Mat3 cov_inv_;
    double log_norm_ = 0.0;
};

/// M_nu(m): Gaussian with covariance (1-nu) T I + nu Theta. nu in [-1/2, 1].
EllipsoidalGaussian ellipsoidal_gaussian(double nu, const MomentState& m);
EllipsoidalGaussian ellipsoidal_gaussian(const PrandtlParam& p, const MomentState& m);

GridDistribution sample_on_grid(const EllipsoidalGaussian& g, const VelocityGrid& grid);

/// Convex combination of Gaussians; the standard strictly positive test
/// family (ln f is then exact, no flooring anywhere).
struct WeightedGaussian {
    double weight;
    MomentState state;
};
using Mixture = std::vector<WeightedGaussian>;

GridDistribution sample_on_grid(const Mixture& mix, const VelocityGrid& grid);

/// Exact moments of a Gaussian mixture (component covariances plus the
/// spread of the component means).
MomentState mixture_moments(const Mixture& mix);

/// Grid accommodating every Gaussian in play: component 8-sigma supports,
/// the mixture's own spread, and the widest temperature tensor that any
/// nu in [-1/2, 1) can produce from it.
VelocityGrid fitted_grid(const Mixture& mix, int n);
VelocityGrid fitted_grid(const MomentState& m, int n);

/// Random positive test state: 1-4 Gaussian components with diagonal
/// covariances, randomized weights, means, and temperatures.
Mixture random_mixture(Rng& rng);

/// Midpoint-rule moments of nodal data. Throws NonPositiveDensity if the
/// quadrature mass is non-positive or non-finite.
MomentState moments(const GridDistribution& f);

struct ConservationResidual {
    double mass = 0.0;
    Vec3 momentum;
    double energy = 0.0;
};

/// Integrals of (M_nu - f) (1, v, |v|^2); zero in exact arithmetic.
ConservationResidual conservation_residual(const PrandtlParam& p, const GridDistribution& f);

/// H(f) = integral of f ln f.
double h_functional(const GridDistribution& f);

/// H(f|g) = integral of f ln(f/g) >= 0. Grids must match.
double relative_entropy(const GridDistribution& f, const GridDistribution& g);

/// Closed-form H(M_nu(m)) = rho [ln rho - ln det(2 pi T_nu)/2] - 3 rho/2.
double h_gaussian_closed(double nu, const MomentState& m);
double h_gaussian_closed(const PrandtlParam& p, const MomentState& m);

/// Closed-form entropy gaps, first = H(M_0) - H(M_nu), second =
/// H(M_0) - H(M_1). Both are <= 0 and their ratio is f_nu of the eigenvalues.
std::pair<double, double> h_gap_closed(const PrandtlParam& p, const MomentState& m);

/// D_nu(f) = A_nu integral (M_nu - f) ln f <= 0.
double entropy_production(const PrandtlParam& p, const GridDistribution& f);

} // namespace esbgk::kinetics
