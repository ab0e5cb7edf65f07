#include "esbgk/gaussian_kinetics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "esbgk/errors.hpp"

namespace esbgk::kinetics {

namespace {

// Neumaier-compensated accumulator; grid reductions stay accurate to a few
// ulps independent of node count.
class KahanSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

constexpr double kSigmaReach = 8.0; // grid extent in standard deviations

// Largest eigenvalue any temperature tensor built from m can have over
// nu in [-1/2, 1): bounded by 1.5 * max(T, theta1).
double widest_tensor_eigenvalue(const MomentState& m) {
    return 1.5 * std::max(m.T(), m.eigenvalues()[0]);
}

} // namespace

MomentState::MomentState(double rho, const Vec3& U, const Mat3& Theta) : rho_(rho), U_(U) {
    if (!(rho > 0.0) || !std::isfinite(rho)) {
        throw NonPositiveDensity("MomentState: rho must be positive and finite");
    }
    const double asym = (Theta - Theta.symmetrized()).max_abs();
    if (asym > 1e-12 * std::max(1.0, Theta.max_abs())) {
        throw std::invalid_argument("MomentState: Theta is not symmetric");
    }
    Theta_ = Theta.symmetrized();
    T_ = Theta_.trace() / 3.0;
    eig_ = sym_eigenvalues(Theta_);
    if (!(eig_[2] > 0.0)) {
        throw std::invalid_argument("MomentState: Theta must be positive-definite");
    }
}

Mat3 temperature_tensor(double nu, const MomentState& m) {
    if (!(nu >= -0.5 && nu <= 1.0)) {
        throw std::invalid_argument("temperature_tensor: nu must lie in [-1/2, 1]");
    }
    return Mat3::identity() * ((1.0 - nu) * m.T()) + m.Theta() * nu;
}

EllipsoidalGaussian EllipsoidalGaussian::from_covariance(double rho, const Vec3& U,
                                                         const Mat3& cov) {
    const Mat3 c = cov.symmetrized();
    const double d = c.det();
    if (!(d >= 1e-30)) {
        throw SingularTensor("EllipsoidalGaussian: covariance determinant below 1e-30");
    }
    EllipsoidalGaussian g;
    g.rho_ = rho;
    g.U_ = U;
    g.cov_ = c;
    g.cov_inv_ = c.inverse();
    g.log_norm_ = std::log(rho) - 0.5 * (3.0 * std::log(2.0 * std::numbers::pi) + std::log(d));
    return g;
}

EllipsoidalGaussian ellipsoidal_gaussian(double nu, const MomentState& m) {
    return EllipsoidalGaussian::from_covariance(m.rho(), m.U(), temperature_tensor(nu, m));
}

EllipsoidalGaussian ellipsoidal_gaussian(const PrandtlParam& p, const MomentState& m) {
    return ellipsoidal_gaussian(p.nu(), m);
}

GridDistribution sample_on_grid(const EllipsoidalGaussian& g, const VelocityGrid& grid) {
    GridDistribution f(grid);
    const int n = grid.n();
    for (int i = 0; i < n; ++i) {
        const double vx = grid.axis(i);
        for (int j = 0; j < n; ++j) {
            const double vy = grid.axis(j);
            for (int k = 0; k < n; ++k) {
                f.values[grid.index(i, j, k)] = g(vx, vy, grid.axis(k));
            }
        }
    }
    return f;
}

GridDistribution sample_on_grid(const Mixture& mix, const VelocityGrid& grid) {
    if (mix.empty()) throw std::invalid_argument("sample_on_grid: empty mixture");
    GridDistribution f(grid);
    for (const auto& [w, state] : mix) {
        // Component covariance is the component's own stress tensor (nu = 1).
        const auto g = ellipsoidal_gaussian(1.0, state);
        const int n = grid.n();
        for (int i = 0; i < n; ++i) {
            const double vx = grid.axis(i);
            for (int j = 0; j < n; ++j) {
                const double vy = grid.axis(j);
                for (int k = 0; k < n; ++k) {
                    f.values[grid.index(i, j, k)] += w * g(vx, vy, grid.axis(k));
                }
            }
        }
    }
    return f;
}

MomentState mixture_moments(const Mixture& mix) {
    if (mix.empty()) throw std::invalid_argument("mixture_moments: empty mixture");
    double rho = 0.0;
    Vec3 mom;
    for (const auto& [w, s] : mix) {
        rho += w * s.rho();
        mom = mom + w * s.rho() * s.U();
    }
    const Vec3 U = mom * (1.0 / rho);
    Mat3 Theta;
    for (const auto& [w, s] : mix) {
        const Vec3 dU = s.U() - U;
        Theta = Theta + (s.Theta() + outer(dU, dU)) * (w * s.rho() / rho);
    }
    return MomentState(rho, U, Theta.symmetrized());
}

VelocityGrid fitted_grid(const Mixture& mix, int n) {
    const MomentState total = mixture_moments(mix);
    double L = total.U().max_abs() + kSigmaReach * std::sqrt(widest_tensor_eigenvalue(total));
    for (const auto& [w, s] : mix) {
        L = std::max(L, s.U().max_abs() + kSigmaReach * std::sqrt(s.eigenvalues()[0]));
    }
    return VelocityGrid(n, L);
}

VelocityGrid fitted_grid(const MomentState& m, int n) {
    return fitted_grid(Mixture{{1.0, m}}, n);
}

Mixture random_mixture(Rng& rng) {
    const int n_comp = 1 + static_cast<int>(rng.uniform() * 4.0);
    Mixture mix;
    for (int c = 0; c < n_comp; ++c) {
        const double w = rng.uniform(0.2, 1.0);
        const double rho = rng.uniform(0.3, 1.2);
        const Vec3 U{rng.uniform(-1.2, 1.2), rng.uniform(-1.2, 1.2), rng.uniform(-1.2, 1.2)};
        const Mat3 Theta = Mat3::diag(rng.uniform(0.6, 2.5), rng.uniform(0.6, 2.5),
                                      rng.uniform(0.6, 2.5));
        mix.push_back({w, MomentState(rho, U, Theta)});
    }
    return mix;
}

MomentState moments(const GridDistribution& f) {
    const VelocityGrid& grid = f.grid;
    const double w = grid.weight();
    const int n = grid.n();

    KahanSum s0, sx, sy, sz;
    for (int i = 0; i < n; ++i) {
        const double vx = grid.axis(i);
        for (int j = 0; j < n; ++j) {
            const double vy = grid.axis(j);
            for (int k = 0; k < n; ++k) {
                const double fv = f.values[grid.index(i, j, k)];
                s0.add(fv);
                sx.add(fv * vx);
                sy.add(fv * vy);
                sz.add(fv * grid.axis(k));
            }
        }
    }
    const double rho = s0.value() * w;
    if (!(rho > 0.0) || !std::isfinite(rho)) {
        throw NonPositiveDensity("moments: non-positive or non-finite density");
    }
    const Vec3 U = Vec3{sx.value(), sy.value(), sz.value()} * (w / rho);

    KahanSum xx, xy, xz, yy, yz, zz;
    for (int i = 0; i < n; ++i) {
        const double cx = grid.axis(i) - U.x;
        for (int j = 0; j < n; ++j) {
            const double cy = grid.axis(j) - U.y;
            for (int k = 0; k < n; ++k) {
                const double cz = grid.axis(k) - U.z;
                const double fv = f.values[grid.index(i, j, k)];
                xx.add(fv * cx * cx);
                xy.add(fv * cx * cy);
                xz.add(fv * cx * cz);
                yy.add(fv * cy * cy);
                yz.add(fv * cy * cz);
                zz.add(fv * cz * cz);
            }
        }
    }
    Mat3 Theta;
    Theta(0, 0) = xx.value() * w / rho;
    Theta(1, 1) = yy.value() * w / rho;
    Theta(2, 2) = zz.value() * w / rho;
    Theta(0, 1) = Theta(1, 0) = xy.value() * w / rho;
    Theta(0, 2) = Theta(2, 0) = xz.value() * w / rho;
    Theta(1, 2) = Theta(2, 1) = yz.value() * w / rho;
    return MomentState(rho, U, Theta);
}

ConservationResidual conservation_residual(const PrandtlParam& p, const GridDistribution& f) {
    const MomentState m = moments(f);
    const auto mnu = ellipsoidal_gaussian(p, m);
    const VelocityGrid& grid = f.grid;
    const int n = grid.n();

    KahanSum s0, sx, sy, sz, se;
    for (int i = 0; i < n; ++i) {
        const double vx = grid.axis(i);
        for (int j = 0; j < n; ++j) {
            const double vy = grid.axis(j);
            for (int k = 0; k < n; ++k) {
                const double vz = grid.axis(k);
                const double d = mnu(vx, vy, vz) - f.values[grid.index(i, j, k)];
                s0.add(d);
                sx.add(d * vx);
                sy.add(d * vy);
                sz.add(d * vz);
                se.add(d * (vx * vx + vy * vy + vz * vz));
            }
        }
    }
    const double w = grid.weight();
    ConservationResidual r;
    r.mass = s0.value() * w;
    r.momentum = Vec3{sx.value(), sy.value(), sz.value()} * w;
    r.energy = se.value() * w;
    return r;
}

double h_functional(const GridDistribution& f) {
    KahanSum s;
    for (double v : f.values) s.add(v * std::log(v));
    return s.value() * f.grid.weight();
}

double relative_entropy(const GridDistribution& f, const GridDistribution& g) {
    if (!(f.grid == g.grid)) {
        throw std::invalid_argument("relative_entropy: distributions live on different grids");
    }
    KahanSum s;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        s.add(f.values[i] * std::log(f.values[i] / g.values[i]));
    }
    return s.value() * f.grid.weight();
}

double h_gaussian_closed(double nu, const MomentState& m) {
    const double d = temperature_tensor(nu, m).det();
    const double rho = m.rho();
    return rho * (std::log(rho) -
                  0.5 * (3.0 * std::log(2.0 * std::numbers::pi) + std::log(d))) -
           1.5 * rho;
}

double h_gaussian_closed(const PrandtlParam& p, const MomentState& m) {
    return h_gaussian_closed(p.nu(), m);
}

std::pair<double, double> h_gap_closed(const PrandtlParam& p, const MomentState& m) {
    const double mean = m.T();
    double gap_nu = 0.0;
    double gap_1 = 0.0;
    for (double th : m.eigenvalues()) {
        const double d = (th - mean) / mean;
        gap_nu += std::log1p(p.nu() * d);
        gap_1 += std::log1p(d);
    }
    return {0.5 * m.rho() * gap_nu, 0.5 * m.rho() * gap_1};
}

double entropy_production(const PrandtlParam& p, const GridDistribution& f) {
    const MomentState m = moments(f);
    const double a_nu = p.collision_frequency(m.rho(), m.T());
    const auto mnu = ellipsoidal_gaussian(p, m);
    const VelocityGrid& grid = f.grid;
    const int n = grid.n();

    KahanSum s;
    for (int i = 0; i < n; ++i) {
        const double vx = grid.axis(i);
        for (int j = 0; j < n; ++j) {
            const double vy = grid.axis(j);
            for (int k = 0; k < n; ++k) {
                const double fv = f.values[grid.index(i, j, k)];
                s.add((mnu(vx, vy, grid.axis(k)) - fv) * std::log(fv));
            }
        }
    }
    return a_nu * s.value() * grid.weight();
}

} // namespace esbgk::kinetics
