#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "hbops/function.hpp"
#include "hbops/geometry.hpp"
#include "hbops/power_series.hpp"
#include "hbops/quadrature.hpp"
#include "hbops/types.hpp"

namespace hbops {

// Holomorphic self-map of the ball. Polynomial and Linear kinds carry exact
// derivative data; ClosedForm carries user-supplied pointwise evaluators.
class HoloSelfMap {
public:
    enum class Kind { Polynomial, Linear, ClosedForm };

    using ValueFn = std::function<Point(const Point&)>;
    using RadialFn = std::function<std::vector<Cplx>(const Point&)>;

    static HoloSelfMap identity(int n);
    static HoloSelfMap dilation(int n, Cplx lambda); // z -> lambda z
    static HoloSelfMap linear(std::vector<std::vector<Cplx>> matrix);
    static HoloSelfMap polynomial(std::vector<PowerSeries> components);
    static HoloSelfMap closed_form(int n, ValueFn value, RadialFn radial,
                                   std::optional<double> range_margin = std::nullopt);

    Kind kind() const { return kind_; }
    int dimension() const { return dimension_; }

    // phi(z); throws RangeViolation when |phi(z)| >= 1.
    Point value(const Point& z) const;

    // (R phi_1(z), ..., R phi_n(z)).
    std::vector<Cplx> radial(const Point& z) const;

    // J[k][j] = d phi_k / d z_j at z. Unavailable for ClosedForm.
    std::vector<std::vector<Cplx>> jacobian(const Point& z) const;
    bool has_jacobian() const { return kind_ != Kind::ClosedForm; }

    // A bound on sup_B |phi| that needs no sampling: largest singular value
    // for Linear, the l2-of-l1 coefficient bound for Polynomial, 1 - margin
    // for ClosedForm when a margin was declared.
    std::optional<double> certified_sup() const;

    const std::vector<PowerSeries>& components() const;
    const std::vector<std::vector<Cplx>>& matrix() const;

    // Polynomial components equivalent to this map (materializes Linear).
    std::vector<PowerSeries> as_polynomial() const;

private:
    HoloSelfMap() = default;

    Kind kind_ = Kind::Linear;
    int dimension_ = 0;
    std::vector<PowerSeries> components_;
    std::vector<PowerSeries> component_radials_;
    std::vector<std::vector<PowerSeries>> component_gradients_;
    std::vector<std::vector<Cplx>> matrix_;
    ValueFn value_fn_;
    RadialFn radial_fn_;
    std::optional<double> range_margin_;
};

double largest_singular_value(const std::vector<std::vector<Cplx>>& matrix,
                              std::vector<Cplx>* right_vector = nullptr);

struct MapValidation {
    double sup_estimate = 0.0;
    Point argmax;
    bool certified = false; // bound is exact/analytic rather than sampled
    bool pass = false;
    double threshold = 1.0 - 1e-9;
};

struct SamplingGrid;
MapValidation validate_self_map(const HoloSelfMap& phi, const SamplingGrid& grid);

// Weight g in H(B) with g(0) = 0: a polynomial with zero constant term or
// the log form g(z) = (log 1/(1 - <z,b>))^p.
class Symbol : public BallFunction {
public:
    enum class Kind { Polynomial, LogForm };

    static Symbol polynomial(PowerSeries g);
    static Symbol log_form(Point b, int power);
    static Symbol zero(int n) { return polynomial(PowerSeries::zero(n)); }

    Kind kind() const { return kind_; }
    int dimension() const override { return dimension_; }

    Cplx value(const Point& z) const override;
    Cplx radial(const Point& z) const override;
    Cplx radial2(const Point& z) const override;
    std::vector<Cplx> gradient(const Point& z) const override;
    std::vector<Cplx> radial_gradient(const Point& z) const override;

    bool has_radial2() const override { return true; }
    bool has_gradient() const override { return true; }
    bool has_radial_gradient() const override { return true; }

    const PowerSeries& series() const;
    const Point& log_direction() const { return b_; }
    int log_power() const { return power_; }

private:
    Symbol() = default;

    Kind kind_ = Kind::Polynomial;
    int dimension_ = 0;
    std::shared_ptr<PowerSeriesFunction> poly_;
    Point b_;
    int power_ = 1;
};

// h(zeta) = (zeta - 1) [ (1 + log 1/(1-zeta))^2 + 1 ], principal branch.
Cplx h_scalar(Cplx zeta);

enum class TestFamily { HA, FA, FK };

// The explicit Zygmund-normalized probe functions. Each is a profile in
// u = <z,a>; values of FA/FK need one scalar quadrature, every derivative
// is closed-form.
class TestFunction : public BallFunction {
public:
    TestFunction(TestFamily family, Point a, QuadratureConfig value_quad = {});

    TestFamily family() const { return family_; }
    const Point& parameter() const { return a_; }
    int dimension() const override { return a_.dim(); }

    Cplx value(const Point& z) const override;
    Cplx radial(const Point& z) const override;
    Cplx radial2(const Point& z) const override;
    std::vector<Cplx> gradient(const Point& z) const override;
    std::vector<Cplx> radial_gradient(const Point& z) const override;

    bool has_radial2() const override { return true; }
    bool has_gradient() const override { return true; }
    bool has_radial_gradient() const override { return true; }

    // Scalar profiles in u = <z,a>, exposed for cross-checks.
    Cplx profile_value(Cplx u) const;
    Cplx profile_radial(Cplx u) const;
    Cplx profile_radial2(Cplx u) const;

private:
    void check_point(const Point& z) const;

    TestFamily family_;
    Point a_;
    double a_norm2_ = 0.0;  // |a|^2
    double log_norm_ = 0.0; // W = log 1/(1-|a|^2)
    double scale_ = 0.0;    // c = 1/(|a|^2 W)
    QuadratureConfig quad_;
};

TestFamily test_family_from_string(const std::string& name);
std::string to_string(TestFamily family);

} // namespace hbops
