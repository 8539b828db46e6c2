#pragma once

#include <memory>
#include <vector>

#include "hbops/geometry.hpp"
#include "hbops/power_series.hpp"
#include "hbops/types.hpp"

namespace hbops {

// Pointwise view of a holomorphic function on the ball. Estimators and
// operators only need values and radial derivatives; richer queries
// (gradients) are optional capabilities.
class BallFunction {
public:
    virtual ~BallFunction() = default;

    virtual int dimension() const = 0;
    virtual Cplx value(const Point& z) const = 0;

    // Rf(z) = sum_j z_j d_j f(z).
    virtual Cplx radial(const Point& z) const = 0;

    virtual Cplx radial2(const Point& z) const;
    virtual std::vector<Cplx> gradient(const Point& z) const;
    // (d_1(Rf), ..., d_n(Rf)) at z.
    virtual std::vector<Cplx> radial_gradient(const Point& z) const;

    virtual bool has_radial2() const { return false; }
    virtual bool has_gradient() const { return false; }
    virtual bool has_radial_gradient() const { return false; }
};

double gradient_norm(const std::vector<Cplx>& g);

// Exact adapter: all derivatives are precomputed coefficient tables.
class PowerSeriesFunction : public BallFunction {
public:
    explicit PowerSeriesFunction(PowerSeries f);

    int dimension() const override { return f_.dimension(); }
    Cplx value(const Point& z) const override { return f_.evaluate(z); }
    Cplx radial(const Point& z) const override { return rf_.evaluate(z); }
    Cplx radial2(const Point& z) const override { return r2f_.evaluate(z); }
    std::vector<Cplx> gradient(const Point& z) const override;
    std::vector<Cplx> radial_gradient(const Point& z) const override;

    bool has_radial2() const override { return true; }
    bool has_gradient() const override { return true; }
    bool has_radial_gradient() const override { return true; }

    const PowerSeries& series() const { return f_; }

private:
    PowerSeries f_, rf_, r2f_;
    std::vector<PowerSeries> grad_, rgrad_;
};

} // namespace hbops
