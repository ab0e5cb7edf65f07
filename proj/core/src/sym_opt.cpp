#include "esbgk/sym_opt.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "esbgk/errors.hpp"

namespace esbgk::symopt {

namespace {

constexpr double kDegeneracyRel = 1e-12;

// Root of t^2 - t^3 = k on the given bracket, bisection refined by Newton.
// The cubic is monotone on each side of t = 2/3, so the bracket is valid.
double cubic_root(double k, double lo, double hi) {
    auto f = [k](double t) { return t * t - t * t * t - k; };
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double fx = f(x);
        if (std::abs(fx) < 1e-16 || (hi - lo) < 1e-15) break;
        // f increases on (0,2/3), decreases on (2/3,1); orient the bracket
        // update by the local slope sign.
        const double slope = 2.0 * x - 3.0 * x * x;
        if ((fx > 0.0) == (slope > 0.0)) hi = x; else lo = x;
        double x_next = x - fx / slope;
        if (!(x_next > lo && x_next < hi)) x_next = 0.5 * (lo + hi);
        x = x_next;
    }
    return x;
}

} // namespace

EigenTriple::EigenTriple(double t1, double t2, double t3) : theta{t1, t2, t3} {
    for (double t : theta) {
        if (!(t > 0.0)) {
            throw std::invalid_argument("EigenTriple: eigenvalues must be positive");
        }
    }
}

double EigenTriple::spread() const {
    const auto [mn, mx] = std::minmax_element(theta.begin(), theta.end());
    return *mx - *mn;
}

EigenTriple EigenTriple::sorted_descending() const {
    EigenTriple r = *this;
    std::sort(r.theta.begin(), r.theta.end(), std::greater<>());
    return r;
}

double f_nu(const PrandtlParam& p, const EigenTriple& t) {
    const EigenTriple s = t.sorted_descending(); // exact permutation invariance
    const double S = s.sum();
    if (s.spread() < kDegeneracyRel * S) {
        throw DegenerateTriple("f_nu: all eigenvalues equal; ratio is 0/0");
    }
    if (p.nu() == 0.0) return 0.0;

    const double mean = S / 3.0;
    double num = 0.0;
    double den = 0.0;
    for (double th : s.theta) {
        const double d = (th - mean) / mean;
        const double nd = p.nu() * d;
        assert(nd > -1.0); // temperature-tensor eigenvalue positivity
        num += std::log1p(nd);
        den += std::log1p(d);
    }
    return num / den;
}

SPRange sp_range(double S, double P) {
    if (!(S > 0.0) || !(P > 0.0)) {
        throw std::invalid_argument("sp_range: S and P must be positive");
    }
    const double k = 4.0 * P / (S * S * S);
    if (!(k < 4.0 / 27.0)) {
        throw InfeasibleSP("sp_range: requires P < S^3/27 (AM-GM)");
    }

    SPRange r;
    r.S = S;
    r.P = P;
    r.k = k;
    r.alpha = cubic_root(k, 0.0, 2.0 / 3.0);
    r.beta = cubic_root(k, 2.0 / 3.0, 1.0);
    r.delta_min = S * S * (4.0 * r.alpha - 3.0 * r.alpha * r.alpha) / 4.0;
    r.delta_max = S * S * (4.0 * r.beta - 3.0 * r.beta * r.beta) / 4.0;
    r.argmin = EigenTriple(S * (1.0 - r.alpha), 0.5 * S * r.alpha, 0.5 * S * r.alpha);
    r.argmax = EigenTriple(0.5 * S * r.beta, 0.5 * S * r.beta, S * (1.0 - r.beta));
    return r;
}

EigenTriple reduce_to_two(const PrandtlParam& p, const EigenTriple& t) {
    const EigenTriple s = t.sorted_descending();
    const double S = s.sum();
    if (s.spread() < kDegeneracyRel * S) {
        throw DegenerateTriple("reduce_to_two: degenerate triple");
    }
    // Already of the minimizing (a, b, b) shape with a > b: fixed point.
    if (s.theta[1] == s.theta[2]) return s;

    const SPRange r = sp_range(S, s.product());
    (void)p; // the map itself does not depend on nu; nu enters the monotonicity claim
    return r.argmin;
}

EigenTriple sample_feasible_triple(const SPRange& r, Rng& rng) {
    // Feasible z (as any one coordinate) fills [S(1-beta), S(1-alpha)]:
    // exactly where z(S-z)^2 >= 4P.
    const double z_lo = r.S * (1.0 - r.beta);
    const double z_hi = r.S * (1.0 - r.alpha);
    const double z = rng.uniform(z_lo, z_hi);
    const double rest = r.S - z;
    const double prod = r.P / z;
    double disc = rest * rest - 4.0 * prod;
    if (disc < 0.0) disc = 0.0; // rounding at the interval ends
    const double x = 0.5 * (rest + std::sqrt(disc));
    const double y = prod / x; // Vieta: avoids cancellation in the small root
    return EigenTriple(x, y, z);
}

double brute_force_sup(const PrandtlParam& p, const RatioGridSpec& spec) {
    if (spec.n1 < 2 || spec.n2 < 2 || !(spec.ratio_min > 0.0) ||
        !(spec.ratio_max > spec.ratio_min)) {
        throw std::invalid_argument("brute_force_sup: bad grid spec");
    }
    const double l0 = std::log(spec.ratio_min);
    const double d1 = (std::log(spec.ratio_max) - l0) / (spec.n1 - 1);
    const double d2 = (std::log(spec.ratio_max) - l0) / (spec.n2 - 1);

    double best = 0.0;
    for (int i = 0; i < spec.n1; ++i) {
        const double r1 = std::exp(l0 + i * d1);
        for (int j = 0; j < spec.n2; ++j) {
            const double r2 = std::exp(l0 + j * d2);
            const EigenTriple t(r1, r2, 1.0);
            if (t.spread() < kDegeneracyRel * t.sum()) continue;
            best = std::max(best, f_nu(p, t));
        }
    }
    return best;
}

} // namespace esbgk::symopt
