#include "hbops/geometry.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hbops {

Point Point::basis(int n, int j) {
    Point p = Point::zero(n);
    p[j] = Cplx(1.0, 0.0);
    return p;
}

Cplx inner_product(const Point& z, const Point& w) {
    if (z.dim() != w.dim())
        throw std::invalid_argument("inner_product: dimension mismatch (" +
                                    std::to_string(z.dim()) + " vs " + std::to_string(w.dim()) + ")");
    Cplx s(0.0, 0.0);
    for (int k = 0; k < z.dim(); ++k) s += z[k] * std::conj(w[k]);
    return s;
}

double ball_norm(const Point& z) {
    double s = 0.0;
    for (const Cplx& c : z.coords) s += std::norm(c);
    return std::sqrt(s);
}

Point scale(const Point& z, double t) {
    Point out = z;
    for (Cplx& c : out.coords) c *= t;
    return out;
}

std::string format_point(const Point& z) {
    auto num = [](double x) {
        char buf[32];
        auto r = std::to_chars(buf, buf + sizeof(buf), x);
        return std::string(buf, r.ptr);
    };
    std::string s = "(";
    for (int k = 0; k < z.dim(); ++k) {
        if (k) s += ", ";
        s += num(z[k].real()) + (z[k].imag() < 0 ? "" : "+") + num(z[k].imag()) + "i";
    }
    return s + ")";
}

std::vector<Point> SamplingGrid::points() const {
    std::vector<Point> out;
    for (int j = 0; j < shell_count(); ++j) {
        if (shells[static_cast<std::size_t>(j)] == 0.0) {
            out.push_back(Point::zero(dimension));
            continue;
        }
        for (const Point& d : directions) out.push_back(scale(d, shells[static_cast<std::size_t>(j)]));
    }
    return out;
}

namespace {

double radical_inverse(std::uint32_t base, std::uint64_t index) {
    double inv = 1.0 / base, f = inv, v = 0.0;
    while (index > 0) {
        v += f * static_cast<double>(index % base);
        index /= base;
        f *= inv;
    }
    return v;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint32_t kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                     31, 37, 41, 43, 47, 53, 59, 61, 67, 71};

// Point index i of a Cranley-Patterson shifted Halton set in [0,1)^d,
// mapped to the unit sphere of C^n (d = 2n reals) via Box-Muller.
Point sphere_direction(int n, std::uint64_t index, const std::vector<double>& shift) {
    const int d = 2 * n;
    std::vector<double> u(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        double v = radical_inverse(kPrimes[k], index + 1) + shift[static_cast<std::size_t>(k)];
        v -= std::floor(v);
        u[static_cast<std::size_t>(k)] = std::max(v, 1e-300);
    }
    std::vector<double> x(static_cast<std::size_t>(d));
    for (int k = 0; k + 1 < d; k += 2) {
        const double rad = std::sqrt(-2.0 * std::log(u[static_cast<std::size_t>(k)]));
        const double ang = 2.0 * std::numbers::pi * u[static_cast<std::size_t>(k + 1)];
        x[static_cast<std::size_t>(k)] = rad * std::cos(ang);
        x[static_cast<std::size_t>(k + 1)] = rad * std::sin(ang);
    }
    double norm2 = 0.0;
    for (double v : x) norm2 += v * v;
    Point p = Point::zero(n);
    if (norm2 == 0.0) {
        p[0] = Cplx(1.0, 0.0);
        return p;
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (int k = 0; k < n; ++k)
        p[k] = Cplx(x[static_cast<std::size_t>(2 * k)] * inv, x[static_cast<std::size_t>(2 * k + 1)] * inv);
    return p;
}

} // namespace

SamplingGrid make_grid(int n, int shell_count, int points_per_shell, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("make_grid: dimension must be >= 1");
    if (shell_count < 1) throw std::invalid_argument("make_grid: shell_count must be >= 1");
    if (points_per_shell < 1) throw std::invalid_argument("make_grid: points_per_shell must be >= 1");
    if (2 * n > static_cast<int>(sizeof(kPrimes) / sizeof(kPrimes[0])))
        throw std::invalid_argument("make_grid: dimension too large for the Halton basis table");

    SamplingGrid grid;
    grid.dimension = n;
    grid.seed = seed;
    grid.shells.reserve(static_cast<std::size_t>(shell_count));
    for (int j = 0; j < shell_count; ++j) grid.shells.push_back(1.0 - std::ldexp(1.0, -j));

    grid.directions.reserve(static_cast<std::size_t>(points_per_shell));
    if (n == 1) {
        for (int k = 0; k < points_per_shell; ++k) {
            const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) /
                                 static_cast<double>(points_per_shell);
            grid.directions.push_back(Point({Cplx(std::cos(theta), std::sin(theta))}));
        }
    } else {
        std::uint64_t state = seed;
        std::vector<double> shift(static_cast<std::size_t>(2 * n));
        for (double& s : shift) s = std::ldexp(static_cast<double>(splitmix64(state) >> 11), -53);
        for (int k = 0; k < points_per_shell; ++k)
            grid.directions.push_back(sphere_direction(n, static_cast<std::uint64_t>(k), shift));
    }
    return grid;
}

} // namespace hbops
