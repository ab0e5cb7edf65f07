/// @file velocity_grid.hpp
/// @brief Uniform 3D velocity lattice and nodal distribution storage.

#pragma once

#include <cstddef>
#include <filesystem>
#include <utility>
#include <vector>

#include "esbgk/prandtl.hpp"

namespace esbgk::kinetics {

/// Cube [-L, L]^3 split into n^3 midpoint cells per axis.
class VelocityGrid {
public:
    VelocityGrid(int n, double half_width);

    int n() const { return n_; }
    double half_width() const { return half_width_; }
    double spacing() const { return 2.0 * half_width_ / n_; }
    /// Midpoint-rule cell volume h^3; the weights sum to (2L)^3.
    double weight() const { return spacing() * spacing() * spacing(); }

    double axis(int i) const { return -half_width_ + (i + 0.5) * spacing(); }

    std::size_t size() const {
        return static_cast<std::size_t>(n_) * n_ * n_;
    }
    std::size_t index(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
    }

    bool operator==(const VelocityGrid& o) const {
        return n_ == o.n_ && half_width_ == o.half_width_;
    }

private:
    int n_;
    double half_width_;
};

/// Nodal values of a velocity distribution on a VelocityGrid. Consumers of
/// ln f require strict positivity; operations that can break it check and
/// throw rather than clamp.
struct GridDistribution {
    VelocityGrid grid;
    std::vector<double> values;

    explicit GridDistribution(const VelocityGrid& g)
        : grid(g), values(g.size(), 0.0) {}
    GridDistribution(const VelocityGrid& g, std::vector<double> v);

    double min_value() const;
    bool strictly_positive() const { return min_value() > 0.0; }
};

/// Flat binary layout: little-endian int64 n, then float64 L, nu, alpha,
/// beta, then n^3 float64 nodal values.
void write_binary(const std::filesystem::path& path, const GridDistribution& f,
                  const PrandtlParam& p);
std::pair<GridDistribution, PrandtlParam> read_binary(const std::filesystem::path& path);

/// CSV dump (vx,vy,vz,f), 17 significant digits; intended for small grids.
void write_csv(const std::filesystem::path& path, const GridDistribution& f);

} // namespace esbgk::kinetics
