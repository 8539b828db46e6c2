#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hbops/function.hpp"
#include "hbops/geometry.hpp"

namespace hbops {

struct GridDescriptor {
    int dimension = 1;
    int shells = 0;
    int points_per_shell = 0;
    std::uint64_t seed = 0;
};

GridDescriptor describe(const SamplingGrid& grid);

// Sampled supremum of a nonnegative quantity. The trace holds one maximum
// per radial slab [r_j, r_{j+1}); the value is the max of the trace and the
// witness reproduces it on re-evaluation.
struct NormEstimate {
    double value = 0.0;
    Point witness;
    std::vector<double> trace;
    GridDescriptor grid;
};

// Evaluates q on every shell point and on the arithmetic-midpoint radii
// between consecutive shells (same directions). Midpoints sharpen the sup
// between the dyadic radii without touching the grid contract. Ties keep
// the first site in slab-major order.
NormEstimate sweep_max(const SamplingGrid& grid, const std::function<double(const Point&)>& q,
                       int threads = 1);

// b(f) = sup (1-|z|^2) |Rf(z)|.
NormEstimate bloch_seminorm(const BallFunction& f, const SamplingGrid& grid, int threads = 1);

// ||f||_B = |f(0)| + sup (1-|z|^2) |grad f(z)|.
NormEstimate bloch_norm(const BallFunction& f, const SamplingGrid& grid, int threads = 1);

// ||f||_Z = |f(0)| + |grad f(0)| + sup (1-|z|^2) |R^2 f(z)|.
NormEstimate zygmund_norm(const BallFunction& f, const SamplingGrid& grid, int threads = 1);

// sup |f|.
NormEstimate sup_norm(const BallFunction& f, const SamplingGrid& grid, int threads = 1);

enum class Classification {
    Finite,
    Divergent,
    Vanishing,
    NonVanishing,
    Inconclusive,
    VacuouslyZero,
};

std::string to_string(Classification c);

struct DecayThresholds {
    double vanish_fraction = 0.05;
    double floor_fraction = 0.5;
    double growth_ratio = 1.5;
};

// Boundary-decay verdict from a shell trace: Vanishing needs a decreasing
// tail that ends below vanish_fraction of the peak, NonVanishing a tail
// floored at floor_fraction of the peak.
Classification classify_decay(const std::vector<double>& trace, const DecayThresholds& th);

// Finite/Divergent verdict: Divergent needs monotone growth by a factor of
// at least growth_ratio across the last four shells.
Classification classify_growth(const std::vector<double>& trace, const DecayThresholds& th);

struct ShellProfile {
    NormEstimate estimate;
    Classification classification = Classification::Inconclusive;
    int order = 1;
};

// Order 1 profiles (1-|z|^2)|grad f| (membership in B_0), order 2 profiles
// (1-|z|^2)|R^2 f| (membership in Z_0).
ShellProfile little_space_profile(const BallFunction& f, const SamplingGrid& grid, int order,
                                  const DecayThresholds& th = {}, int threads = 1);

} // namespace hbops
