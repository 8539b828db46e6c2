#include "hbops/function.hpp"

#include <cmath>

namespace hbops {

Cplx BallFunction::radial2(const Point&) const {
    throw UnsupportedOperation("second radial derivative not available for this function");
}

std::vector<Cplx> BallFunction::gradient(const Point&) const {
    throw UnsupportedOperation("gradient not available for this function");
}

std::vector<Cplx> BallFunction::radial_gradient(const Point&) const {
    throw UnsupportedOperation("radial gradient not available for this function");
}

double gradient_norm(const std::vector<Cplx>& g) {
    double s = 0.0;
    for (const Cplx& c : g) s += std::norm(c);
    return std::sqrt(s);
}

PowerSeriesFunction::PowerSeriesFunction(PowerSeries f)
    : f_(std::move(f)), rf_(f_.radial_derivative()), r2f_(rf_.radial_derivative()),
      grad_(f_.gradient()), rgrad_(rf_.gradient()) {}

std::vector<Cplx> PowerSeriesFunction::gradient(const Point& z) const {
    std::vector<Cplx> out;
    out.reserve(grad_.size());
    for (const PowerSeries& g : grad_) out.push_back(g.evaluate(z));
    return out;
}

std::vector<Cplx> PowerSeriesFunction::radial_gradient(const Point& z) const {
    std::vector<Cplx> out;
    out.reserve(rgrad_.size());
    for (const PowerSeries& g : rgrad_) out.push_back(g.evaluate(z));
    return out;
}

} // namespace hbops
