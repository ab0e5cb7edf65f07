#include "esbgk/velocity_grid.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <stdexcept>

#include "esbgk/format.hpp"

namespace esbgk::kinetics {

namespace {

void put_u64_le(std::ostream& os, std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    os.write(b, 8);
}

std::uint64_t get_u64_le(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

void put_f64_le(std::ostream& os, double d) { put_u64_le(os, std::bit_cast<std::uint64_t>(d)); }

double get_f64_le(std::istream& is) { return std::bit_cast<double>(get_u64_le(is)); }

} // namespace

VelocityGrid::VelocityGrid(int n, double half_width) : n_(n), half_width_(half_width) {
    if (n < 8) throw std::invalid_argument("VelocityGrid: n must be >= 8");
    if (!(half_width > 0.0)) throw std::invalid_argument("VelocityGrid: L must be > 0");
}

GridDistribution::GridDistribution(const VelocityGrid& g, std::vector<double> v)
    : grid(g), values(std::move(v)) {
    if (values.size() != grid.size()) {
        throw std::invalid_argument("GridDistribution: value count does not match grid");
    }
}

double GridDistribution::min_value() const {
    return *std::min_element(values.begin(), values.end());
}

void write_binary(const std::filesystem::path& path, const GridDistribution& f,
                  const PrandtlParam& p) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("write_binary: cannot open " + path.string());
    put_u64_le(os, static_cast<std::uint64_t>(f.grid.n()));
    put_f64_le(os, f.grid.half_width());
    put_f64_le(os, p.nu());
    put_f64_le(os, p.alpha());
    put_f64_le(os, p.beta());
    for (double v : f.values) put_f64_le(os, v);
    if (!os) throw std::runtime_error("write_binary: write failed for " + path.string());
}

std::pair<GridDistribution, PrandtlParam> read_binary(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("read_binary: cannot open " + path.string());
    const auto n = static_cast<std::int64_t>(get_u64_le(is));
    const double L = get_f64_le(is);
    const double nu = get_f64_le(is);
    const double alpha = get_f64_le(is);
    const double beta = get_f64_le(is);
    if (!is || n < 8 || n > (1 << 12)) {
        throw std::runtime_error("read_binary: corrupt header in " + path.string());
    }
    const PrandtlParam p(nu, alpha, beta);
    GridDistribution f{VelocityGrid(static_cast<int>(n), L)};
    for (double& v : f.values) v = get_f64_le(is);
    if (!is) throw std::runtime_error("read_binary: truncated payload in " + path.string());
    if (!f.strictly_positive()) {
        throw std::runtime_error("read_binary: non-positive nodal value in " + path.string());
    }
    return {std::move(f), p};
}

void write_csv(const std::filesystem::path& path, const GridDistribution& f) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("write_csv: cannot open " + path.string());
    os << "vx,vy,vz,f\n";
    const int n = f.grid.n();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                os << fmt17(f.grid.axis(i)) << ',' << fmt17(f.grid.axis(j)) << ','
                   << fmt17(f.grid.axis(k)) << ',' << fmt17(f.values[f.grid.index(i, j, k)])
                   << '\n';
            }
}

} // namespace esbgk::kinetics
