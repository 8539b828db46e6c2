#pragma once

#include "hbops/function.hpp"
#include "hbops/power_series.hpp"
#include "hbops/quadrature.hpp"
#include "hbops/symbols.hpp"

namespace hbops {

// I_phi^g f(z) = int_0^1 Rf(phi(tz)) g(tz) dt/t by adaptive quadrature.
// g(0) = 0 keeps the integrand continuous at t = 0; the panels never touch
// the endpoint anyway.
Cplx apply_integral_operator(const BallFunction& f, const HoloSelfMap& phi, const Symbol& g,
                             const Point& z, const QuadratureConfig& cfg = {},
                             double* err_est = nullptr);

// Exact path: q = (Rf)(phi) * g, split into homogeneous parts q = sum q_k,
// return sum q_k / k -- the unique F with F(0) = 0 and RF = q.
PowerSeries integral_operator_series(const PowerSeries& f, const HoloSelfMap& phi, const Symbol& g,
                                     int degree_cap = PowerSeries::kDefaultDegreeCap);

// T_g f(z) = int_0^1 f(tz) Rg(tz) dt/t. Any g works: Rg always vanishes at 0.
Cplx apply_Tg(const BallFunction& f, const BallFunction& g, const Point& z,
              const QuadratureConfig& cfg = {}, double* err_est = nullptr);

// I_g f(z) = int_0^1 Rf(tz) g(tz) dt/t = I_id^g f(z).
Cplx apply_Ig(const BallFunction& f, const Symbol& g, const Point& z,
              const QuadratureConfig& cfg = {}, double* err_est = nullptr);

// Lemma-1 shortcut: R[I_phi^g f](z) = Rf(phi(z)) g(z), no quadrature.
Cplx radial_of_integral(const BallFunction& f, const HoloSelfMap& phi, const BallFunction& g,
                        const Point& z);

// R^2[I_phi^g f](z) = R_z[(Rf) o phi](z) g(z) + Rf(phi(z)) Rg(z) with the
// exact chain rule R_z[(Rf) o phi] = sum_k d_k(Rf)(phi(z)) Rphi_k(z).
Cplx second_radial_of_integral(const BallFunction& f, const HoloSelfMap& phi,
                               const BallFunction& g, const Point& z);

// R(I_phi^g f) as a pointwise function, for norm estimation of operator
// outputs. Non-owning: f, phi, g must outlive this view.
class OperatorRadialOutput : public BallFunction {
public:
    OperatorRadialOutput(const BallFunction& f, const HoloSelfMap& phi, const BallFunction& g);

    int dimension() const override { return phi_->dimension(); }
    Cplx value(const Point& z) const override;
    Cplx radial(const Point& z) const override;
    std::vector<Cplx> gradient(const Point& z) const override;

    bool has_gradient() const override;

private:
    const BallFunction* f_;
    const HoloSelfMap* phi_;
    const BallFunction* g_;
};

} // namespace hbops
