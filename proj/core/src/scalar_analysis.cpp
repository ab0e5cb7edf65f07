#include "esbgk/scalar_analysis.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "esbgk/errors.hpp"

namespace esbgk::scalar {

namespace {

// Both g1 and g2 vanish quadratically at x = 0; log1p keeps the
// cancellation benign down to x ~ 1e-8 and below.
double log1p3(double x) { return std::log1p(x / 3.0); }

// Second derivatives, used by the Newton step on phi.
double g1_pp(double nu, double x) {
    const double a = (1.0 + 2.0 * nu) / 3.0;
    const double b = (1.0 - nu) / 3.0;
    const double t = 1.0 + x / 3.0;
    const double u = 1.0 + a * x;
    const double w = 1.0 + b * x;
    return -(1.0 / 3.0) / (t * t) + a * a / (u * u) + 2.0 * b * b / (w * w);
}

double g2_pp(double x) {
    const double t = 1.0 + x / 3.0;
    const double u = 1.0 + x;
    return -(1.0 / 3.0) / (t * t) + 1.0 / (u * u);
}

// phi'(x) = g2 g1'' - g1 g2'' (the g1' g2' cross terms cancel).
double phi_prime(const PrandtlParam& p, double x) {
    return g2(x) * g1_pp(p.nu(), x) - g1(p, x) * g2_pp(x);
}

// Supremum of g_ratio over a log-spaced grid; diagnostic cross-check for
// the root-based value.
double grid_supremum(const PrandtlParam& p, int points, double x_lo, double x_hi) {
    const double l0 = std::log(x_lo);
    const double dl = (std::log(x_hi) - l0) / (points - 1);
    double best = 0.0;
    for (int i = 0; i < points; ++i) {
        best = std::max(best, g_ratio(p, std::exp(l0 + i * dl)));
    }
    return best;
}

} // namespace

double g1(const PrandtlParam& p, double x) {
    const double nu = p.nu();
    const double a1 = x;
    const double a2 = (1.0 + 2.0 * nu) * x;
    const double a3 = (1.0 - nu) * x;
    // Log arguments 1 + a/3 stay positive for nu in [-1/2, 1) and x >= 0.
    assert(a2 > -3.0 && a3 > -3.0);
    return 3.0 * log1p3(a1) - log1p3(a2) - 2.0 * log1p3(a3);
}

double g2(double x) { return 3.0 * log1p3(x) - std::log1p(x); }

double g_ratio(const PrandtlParam& p, double x) {
    if (p.nu() == 0.0 || x == 0.0) return 0.0;
    return g1(p, x) / g2(x);
}

double g1_prime(const PrandtlParam& p, double x) {
    const double nu = p.nu();
    const double t = 1.0 + x / 3.0;
    const double u = 1.0 + (1.0 + 2.0 * nu) * x / 3.0;
    const double w = 1.0 + (1.0 - nu) * x / 3.0;
    return (2.0 * nu * nu * x / 3.0) / (t * u * w);
}

double g2_prime(double x) {
    const double t = 1.0 + x / 3.0;
    const double u = 1.0 + x;
    return (2.0 * x / 3.0) / (t * u);
}

double derivative_ratio(const PrandtlParam& p, double x) {
    const double nu = p.nu();
    const double u = 1.0 + (1.0 + 2.0 * nu) * x / 3.0;
    const double w = 1.0 + (1.0 - nu) * x / 3.0;
    return nu * nu * (1.0 + x) / (u * w);
}

double x_star(const PrandtlParam& p) {
    const double nu = p.nu();
    if (nu == 0.0 || nu == -0.5) {
        throw std::domain_error("x_star: undefined at nu = 0 and nu = -1/2");
    }
    return std::sqrt((4.0 + 2.0 * nu) / (1.0 + 2.0 * nu)) - 1.0;
}

double closed_bound(const PrandtlParam& p) {
    const double nu = p.nu();
    return nu * nu * (5.0 - 2.0 * nu) / 3.0;
}

double legacy_bound(const PrandtlParam& p) {
    const double nu = p.nu();
    return std::max(-2.0 * nu, nu);
}

double phi(const PrandtlParam& p, double x) {
    return g2(x) * g1_prime(p, x) - g1(p, x) * g2_prime(x);
}

CnuResult compute_cnu(const PrandtlParam& p, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("compute_cnu: tol must be positive");
    const double nu = p.nu();

    CnuResult r;
    r.closed_bound = closed_bound(p);
    r.legacy_bound = legacy_bound(p);

    // Analytic dispatch: the sup degenerates to 0/0 at nu = 0 and is an
    // unattained limit at nu = -1/2. Both have closed answers.
    if (nu == 0.0) {
        r.value = 0.0;
        r.maximizer = Maximizer::kZero;
        return r;
    }
    if (nu == -0.5) {
        r.value = 0.5;
        r.maximizer = Maximizer::kAtInfinity;
        return r;
    }

    // phi > 0 up to and including x_*, and tends to a negative limit, so a
    // sign change exists in (x_*, inf). Expand the right end until found.
    constexpr double kBracketCeiling = 1e12;
    constexpr double kPhiTol = 1e-12;
    double lo = x_star(p);
    double hi = 2.0 * lo;
    while (phi(p, hi) > 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > kBracketCeiling) {
            throw BracketFailure("compute_cnu: no sign change of phi below x = 1e12");
        }
    }

    // Newton refined within the [lo, hi] bracket, bisection fallback.
    double x = 0.5 * (lo + hi);
    double fx = phi(p, x);
    for (int it = 0; it < 200; ++it) {
        if (std::abs(fx) < kPhiTol || (hi - lo) < tol * (1.0 + x)) break;
        if (fx > 0.0) lo = x; else hi = x;
        const double dfx = phi_prime(p, x);
        double x_next = x - fx / dfx;
        if (!(x_next > lo && x_next < hi)) x_next = 0.5 * (lo + hi);
        x = x_next;
        fx = phi(p, x);
    }

    r.value = g_ratio(p, x);
    r.maximizer = Maximizer::kInterior;
    r.x_nu = x;
    r.residual = fx;

    r.grid_sup = grid_supremum(p, 10000, 1e-6, 1e10);
    if (r.value < r.grid_sup - 1e-8) {
        throw std::logic_error("compute_cnu: grid supremum exceeds root value");
    }
    return r;
}

ProductInequalityReport verify_product_inequality(const PrandtlParam& p,
                                                  std::span<const double> xs) {
    if (xs.empty()) {
        throw std::invalid_argument("verify_product_inequality: empty sample list");
    }
    const double nu = p.nu();
    const double b = closed_bound(p);

    ProductInequalityReport rep;
    rep.margins.reserve(xs.size());
    bool first = true;
    for (double x : xs) {
        if (!(x > 0.0)) {
            throw std::invalid_argument("verify_product_inequality: x must be > 0");
        }
        // log LHS - log RHS; evaluated in log space so the nu = 0 case
        // cancels exactly instead of to rounding.
        const double log_lhs =
            log1p3((1.0 + 2.0 * nu) * x) + 2.0 * log1p3((1.0 - nu) * x);
        const double log_rhs = b * std::log1p(x) + 3.0 * (1.0 - b) * log1p3(x);
        const double log_gap = log_lhs - log_rhs;

        ProductMargin m;
        m.x = x;
        m.rel_margin = -std::expm1(-log_gap);           // (LHS - RHS) / LHS
        m.margin = std::exp(log_lhs) * m.rel_margin;    // LHS - RHS
        if (first || m.rel_margin < rep.min_rel_margin) {
            rep.min_rel_margin = m.rel_margin;
            rep.min_margin = m.margin;
            rep.argmin_x = x;
            first = false;
        }
        rep.margins.push_back(m);
    }
    return rep;
}

} // namespace esbgk::scalar
