#include "hbops/operators.hpp"

#include <stdexcept>

namespace hbops {

namespace {

void check_dims(const BallFunction& f, const HoloSelfMap& phi, const BallFunction& g,
                const Point& z) {
    if (f.dimension() != phi.dimension() || g.dimension() != phi.dimension() ||
        z.dim() != phi.dimension())
        throw std::invalid_argument("integral operator: dimension mismatch between f, phi, g, z");
}

} // namespace

Cplx apply_integral_operator(const BallFunction& f, const HoloSelfMap& phi, const Symbol& g,
                             const Point& z, const QuadratureConfig& cfg, double* err_est) {
    check_dims(f, phi, g, z);
    if (ball_norm(z) >= 1.0) throw std::domain_error("apply_integral_operator: |z| must be < 1");
    return integrate_unit_checked(
        [&](double t) {
            const Point tz = scale(z, t);
            return f.radial(phi.value(tz)) * g.value(tz) / t;
        },
        cfg, err_est);
}

PowerSeries integral_operator_series(const PowerSeries& f, const HoloSelfMap& phi, const Symbol& g,
                                     int degree_cap) {
    if (g.kind() != Symbol::Kind::Polynomial)
        throw std::invalid_argument("integral_operator_series: g must be a polynomial symbol");
    const std::vector<PowerSeries> comps = phi.as_polynomial();
    const PowerSeries q = f.radial_derivative().compose(comps, degree_cap) * g.series();
    PowerSeries out(q.dimension());
    for (const auto& [degree, part] : q.homogeneous_parts()) {
        // g(0) = 0 guarantees degree >= 1.
        out += part * Cplx(1.0 / static_cast<double>(degree), 0.0);
    }
    return out;
}

Cplx apply_Tg(const BallFunction& f, const BallFunction& g, const Point& z,
              const QuadratureConfig& cfg, double* err_est) {
    if (f.dimension() != g.dimension() || z.dim() != f.dimension())
        throw std::invalid_argument("apply_Tg: dimension mismatch");
    if (ball_norm(z) >= 1.0) throw std::domain_error("apply_Tg: |z| must be < 1");
    return integrate_unit_checked(
        [&](double t) {
            const Point tz = scale(z, t);
            return f.value(tz) * g.radial(tz) / t;
        },
        cfg, err_est);
}

Cplx apply_Ig(const BallFunction& f, const Symbol& g, const Point& z, const QuadratureConfig& cfg,
              double* err_est) {
    return apply_integral_operator(f, HoloSelfMap::identity(f.dimension()), g, z, cfg, err_est);
}

Cplx radial_of_integral(const BallFunction& f, const HoloSelfMap& phi, const BallFunction& g,
                        const Point& z) {
    check_dims(f, phi, g, z);
    return f.radial(phi.value(z)) * g.value(z);
}

Cplx second_radial_of_integral(const BallFunction& f, const HoloSelfMap& phi,
                               const BallFunction& g, const Point& z) {
    check_dims(f, phi, g, z);
    const Point w = phi.value(z);
    const std::vector<Cplx> df = f.radial_gradient(w);
    const std::vector<Cplx> rphi = phi.radial(z);
    Cplx chain(0.0, 0.0);
    for (std::size_t k = 0; k < df.size(); ++k) chain += df[k] * rphi[k];
    return chain * g.value(z) + f.radial(w) * g.radial(z);
}

OperatorRadialOutput::OperatorRadialOutput(const BallFunction& f, const HoloSelfMap& phi,
                                           const BallFunction& g)
    : f_(&f), phi_(&phi), g_(&g) {
    if (f.dimension() != phi.dimension() || g.dimension() != phi.dimension())
        throw std::invalid_argument("OperatorRadialOutput: dimension mismatch");
}

Cplx OperatorRadialOutput::value(const Point& z) const { return radial_of_integral(*f_, *phi_, *g_, z); }

Cplx OperatorRadialOutput::radial(const Point& z) const {
    return second_radial_of_integral(*f_, *phi_, *g_, z);
}

bool OperatorRadialOutput::has_gradient() const {
    return phi_->has_jacobian() && f_->has_radial_gradient() && g_->has_gradient();
}

std::vector<Cplx> OperatorRadialOutput::gradient(const Point& z) const {
    const Point w = phi_->value(z);
    const std::vector<Cplx> df = f_->radial_gradient(w);
    const std::vector<std::vector<Cplx>> jac = phi_->jacobian(z);
    const Cplx gval = g_->value(z);
    const Cplx fval = f_->radial(w);
    const std::vector<Cplx> dg = g_->gradient(z);
    const int n = dimension();
    std::vector<Cplx> out(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        Cplx s(0.0, 0.0);
        for (int k = 0; k < n; ++k)
            s += df[static_cast<std::size_t>(k)] *
                 jac[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(j)] = s * gval + fval * dg[static_cast<std::size_t>(j)];
    }
    return out;
}

} // namespace hbops
