#pragma once

#include <cstdint>
#include <vector>

#include "hbops/types.hpp"

namespace hbops {

// Point of C^n. Ball membership (|z| < 1) is a property of how the point was
// produced, not of the type; grid constructors guarantee it.
struct Point {
    std::vector<Cplx> coords;

    Point() = default;
    explicit Point(std::vector<Cplx> c) : coords(std::move(c)) {}

    int dim() const { return static_cast<int>(coords.size()); }
    const Cplx& operator[](int k) const { return coords[static_cast<std::size_t>(k)]; }
    Cplx& operator[](int k) { return coords[static_cast<std::size_t>(k)]; }

    static Point zero(int n) { return Point(std::vector<Cplx>(static_cast<std::size_t>(n))); }
    static Point basis(int n, int j);

    bool operator==(const Point& o) const { return coords == o.coords; }
};

// <z,w> = sum_k z_k conj(w_k). Throws on dimension mismatch.
Cplx inner_product(const Point& z, const Point& w);

// |z| = sqrt(<z,z>).
double ball_norm(const Point& z);

// z scaled by a real factor t.
Point scale(const Point& z, double t);

std::string format_point(const Point& z);

// Deterministic sampling grid: dyadic shells r_j = 1 - 2^-j towards the
// boundary, a fixed direction set per shell. Immutable after construction.
struct SamplingGrid {
    int dimension = 1;
    std::vector<double> shells;     // strictly increasing, all < 1; shells[0] == 0
    std::vector<Point> directions;  // unit vectors of C^n
    std::uint64_t seed = 0;

    int shell_count() const { return static_cast<int>(shells.size()); }
    int points_per_shell() const { return static_cast<int>(directions.size()); }

    // Origin shell collapses to a single point.
    std::vector<Point> points() const;
};

// shells r_j = 1 - 2^-j for j = 0..shell_count-1; n = 1 uses equispaced
// angles, n >= 2 a seeded Halton set pushed through Box-Muller onto the
// complex unit sphere. Identical arguments give bitwise-identical grids.
SamplingGrid make_grid(int n, int shell_count, int points_per_shell, std::uint64_t seed);

} // namespace hbops
