#include "hbops/norms.hpp"

#include <algorithm>
#include <cmath>

#include "hbops/parallel.hpp"

namespace hbops {

GridDescriptor describe(const SamplingGrid& grid) {
    return {grid.dimension, grid.shell_count(), grid.points_per_shell(), grid.seed};
}

namespace {

struct Site {
    double radius;
    int direction; // -1 for the origin
    int slab;
};

std::vector<Site> enumerate_sites(const SamplingGrid& grid) {
    std::vector<Site> sites;
    const int shells = grid.shell_count();
    const int dirs = grid.points_per_shell();
    for (int j = 0; j < shells; ++j) {
        const double r = grid.shells[static_cast<std::size_t>(j)];
        if (r == 0.0) {
            sites.push_back({0.0, -1, j});
        } else {
            for (int k = 0; k < dirs; ++k) sites.push_back({r, k, j});
        }
        if (j + 1 < shells) {
            const double mid = 0.5 * (r + grid.shells[static_cast<std::size_t>(j + 1)]);
            for (int k = 0; k < dirs; ++k) sites.push_back({mid, k, j});
        }
    }
    return sites;
}

Point site_point(const SamplingGrid& grid, const Site& s) {
    if (s.direction < 0) return Point::zero(grid.dimension);
    return scale(grid.directions[static_cast<std::size_t>(s.direction)], s.radius);
}

} // namespace

NormEstimate sweep_max(const SamplingGrid& grid, const std::function<double(const Point&)>& q,
                       int threads) {
    const std::vector<Site> sites = enumerate_sites(grid);
    std::vector<double> values(sites.size());
    parallel_for(sites.size(), threads,
                 [&](std::size_t i) { values[i] = q(site_point(grid, sites[i])); });

    NormEstimate est;
    est.grid = describe(grid);
    est.trace.assign(static_cast<std::size_t>(grid.shell_count()), 0.0);
    est.witness = Point::zero(grid.dimension);
    est.value = -1.0;
    for (std::size_t i = 0; i < sites.size(); ++i) {
        const double v = values[i];
        double& slab = est.trace[static_cast<std::size_t>(sites[i].slab)];
        slab = std::max(slab, v);
        if (v > est.value) {
            est.value = v;
            est.witness = site_point(grid, sites[i]);
        }
    }
    if (est.value < 0.0) est.value = 0.0;
    return est;
}

NormEstimate bloch_seminorm(const BallFunction& f, const SamplingGrid& grid, int threads) {
    return sweep_max(grid, [&](const Point& z) {
        const double w = 1.0 - ball_norm(z) * ball_norm(z);
        return w * std::abs(f.radial(z));
    }, threads);
}

NormEstimate bloch_norm(const BallFunction& f, const SamplingGrid& grid, int threads) {
    const double at0 = std::abs(f.value(Point::zero(f.dimension())));
    return sweep_max(grid, [&](const Point& z) {
        const double w = 1.0 - ball_norm(z) * ball_norm(z);
        return at0 + w * gradient_norm(f.gradient(z));
    }, threads);
}

NormEstimate zygmund_norm(const BallFunction& f, const SamplingGrid& grid, int threads) {
    const Point origin = Point::zero(f.dimension());
    const double at0 = std::abs(f.value(origin)) + gradient_norm(f.gradient(origin));
    return sweep_max(grid, [&](const Point& z) {
        const double w = 1.0 - ball_norm(z) * ball_norm(z);
        return at0 + w * std::abs(f.radial2(z));
    }, threads);
}

NormEstimate sup_norm(const BallFunction& f, const SamplingGrid& grid, int threads) {
    return sweep_max(grid, [&](const Point& z) { return std::abs(f.value(z)); }, threads);
}

std::string to_string(Classification c) {
    switch (c) {
        case Classification::Finite: return "Finite";
        case Classification::Divergent: return "Divergent";
        case Classification::Vanishing: return "Vanishing";
        case Classification::NonVanishing: return "NonVanishing";
        case Classification::Inconclusive: return "Inconclusive";
        case Classification::VacuouslyZero: return "VacuouslyZero";
    }
    return "?";
}

Classification classify_decay(const std::vector<double>& trace, const DecayThresholds& th) {
    if (trace.empty()) return Classification::Inconclusive;
    const double peak = *std::max_element(trace.begin(), trace.end());
    if (peak == 0.0) return Classification::Vanishing;

    const std::size_t tail_len = std::min<std::size_t>(4, trace.size());
    const std::size_t tail_begin = trace.size() - tail_len;
    bool decreasing = true;
    double tail_min = trace[tail_begin];
    for (std::size_t j = tail_begin; j < trace.size(); ++j) {
        tail_min = std::min(tail_min, trace[j]);
        if (j > tail_begin && trace[j] > trace[j - 1] * (1.0 + 1e-9)) decreasing = false;
    }
    if (decreasing && trace.back() < th.vanish_fraction * peak) return Classification::Vanishing;
    if (tail_min >= th.floor_fraction * peak) return Classification::NonVanishing;
    return Classification::Inconclusive;
}

Classification classify_growth(const std::vector<double>& trace, const DecayThresholds& th) {
    if (trace.size() < 4) return Classification::Finite;
    const std::size_t w = trace.size() - 4;
    bool increasing = true;
    for (std::size_t j = w + 1; j < trace.size(); ++j)
        if (trace[j] <= trace[j - 1]) increasing = false;
    if (increasing && trace[w] > 0.0 && trace.back() >= th.growth_ratio * trace[w])
        return Classification::Divergent;
    return Classification::Finite;
}

ShellProfile little_space_profile(const BallFunction& f, const SamplingGrid& grid, int order,
                                  const DecayThresholds& th, int threads) {
    if (order != 1 && order != 2)
        throw std::invalid_argument("little_space_profile: order must be 1 or 2");
    ShellProfile profile;
    profile.order = order;
    profile.estimate = sweep_max(grid, [&](const Point& z) {
        const double w = 1.0 - ball_norm(z) * ball_norm(z);
        return order == 1 ? w * gradient_norm(f.gradient(z)) : w * std::abs(f.radial2(z));
    }, threads);
    profile.classification = classify_decay(profile.estimate.trace, th);
    return profile;
}

} // namespace hbops
