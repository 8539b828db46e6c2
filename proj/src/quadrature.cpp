#include "hbops/quadrature.hpp"

#include <cmath>
#include <vector>

namespace hbops {

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1,1], positive half.
constexpr double kNodes[8] = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542};
constexpr double kWeights[8] = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};

Cplx gauss16(const std::function<Cplx(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    Cplx s(0.0, 0.0);
    for (int i = 0; i < 8; ++i) {
        const double dx = half * kNodes[i];
        s += kWeights[i] * (f(mid + dx) + f(mid - dx));
    }
    return half * s;
}

struct Panel {
    double a, b;
    Cplx coarse;
    int depth;
};

} // namespace

QuadratureResult integrate_unit(const std::function<Cplx(double)>& f, const QuadratureConfig& cfg) {
    QuadratureResult res;
    const Cplx whole = gauss16(f, 0.0, 1.0);
    // Budget scale from the first estimate; refreshed below if the total drifts.
    double scale = std::abs(whole);

    std::vector<Panel> stack;
    stack.push_back({0.0, 1.0, whole, 0});
    while (!stack.empty()) {
        Panel p = stack.back();
        stack.pop_back();
        const double mid = 0.5 * (p.a + p.b);
        const Cplx left = gauss16(f, p.a, mid);
        const Cplx right = gauss16(f, mid, p.b);
        const Cplx fine = left + right;
        const double err = std::abs(fine - p.coarse);
        const double budget = std::max(cfg.rel_tol * std::max(scale, std::abs(res.value)),
                                       cfg.abs_floor) *
                              (p.b - p.a);
        if (err <= budget || p.depth >= cfg.max_depth) {
            res.value += fine;
            res.err_est += err;
            res.panels += 2;
            if (err > budget) res.converged = false;
            continue;
        }
        stack.push_back({mid, p.b, right, p.depth + 1});
        stack.push_back({p.a, mid, left, p.depth + 1});
    }
    return res;
}

Cplx integrate_unit_checked(const std::function<Cplx(double)>& f, const QuadratureConfig& cfg,
                            double* err_est) {
    const QuadratureResult res = integrate_unit(f, cfg);
    if (err_est) *err_est = res.err_est;
    if (!res.converged) {
        const double requested =
            std::max(cfg.rel_tol * std::max(std::abs(res.value), 1.0), cfg.abs_floor);
        throw QuadratureError(res.value, res.err_est, requested);
    }
    return res.value;
}

} // namespace hbops
