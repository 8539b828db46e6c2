#pragma once

#include <functional>

#include "hbops/types.hpp"

namespace hbops {

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_floor = 1e-14;
    int max_depth = 40;
};

struct QuadratureResult {
    Cplx value{0.0, 0.0};
    double err_est = 0.0;
    int panels = 0;
    bool converged = true;
};

// Adaptive Gauss-Legendre (order 16) over (0,1]. Panels never evaluate the
// endpoints, so integrands only defined on the open interval are fine.
// Bisection refines wherever the local Richardson estimate is above budget,
// which in practice is towards one or both endpoints.
QuadratureResult integrate_unit(const std::function<Cplx(double)>& f, const QuadratureConfig& cfg);

// Same, but throws QuadratureError when the tolerance is not reached.
Cplx integrate_unit_checked(const std::function<Cplx(double)>& f, const QuadratureConfig& cfg,
                            double* err_est = nullptr);

} // namespace hbops
