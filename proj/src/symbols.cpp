#include "hbops/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hbops {

namespace {

// log(1/(1-u)), principal branch. Re(1-u) > 0 on the ball, so the branch
// cut is never approached.
Cplx log_recip(Cplx u) { return -std::log(Cplx(1.0, 0.0) - u); }

// log(1/(1-u)) / u, stable at u = 0.
Cplx log_recip_over_u(Cplx u) {
    if (std::abs(u) < 1e-4) {
        // 1 + u/2 + u^2/3 + u^3/4 + u^4/5
        return Cplx(1.0, 0.0) + u * (0.5 + u * (Cplx(1.0 / 3.0) + u * (0.25 + u * 0.2)));
    }
    return log_recip(u) / u;
}

Cplx cpow_int(Cplx base, int e) {
    Cplx r(1.0, 0.0);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace

// ---------------------------------------------------------------------------
// HoloSelfMap

HoloSelfMap HoloSelfMap::identity(int n) {
    std::vector<std::vector<Cplx>> m(static_cast<std::size_t>(n),
                                     std::vector<Cplx>(static_cast<std::size_t>(n), Cplx(0.0, 0.0)));
    for (int k = 0; k < n; ++k) m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = Cplx(1.0, 0.0);
    return linear(std::move(m));
}

HoloSelfMap HoloSelfMap::dilation(int n, Cplx lambda) {
    std::vector<std::vector<Cplx>> m(static_cast<std::size_t>(n),
                                     std::vector<Cplx>(static_cast<std::size_t>(n), Cplx(0.0, 0.0)));
    for (int k = 0; k < n; ++k) m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = lambda;
    return linear(std::move(m));
}

HoloSelfMap HoloSelfMap::linear(std::vector<std::vector<Cplx>> matrix) {
    const int n = static_cast<int>(matrix.size());
    if (n < 1) throw std::invalid_argument("HoloSelfMap::linear: empty matrix");
    for (const auto& row : matrix)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("HoloSelfMap::linear: matrix must be square");
    HoloSelfMap phi;
    phi.kind_ = Kind::Linear;
    phi.dimension_ = n;
    phi.matrix_ = std::move(matrix);
    return phi;
}

HoloSelfMap HoloSelfMap::polynomial(std::vector<PowerSeries> components) {
    const int n = static_cast<int>(components.size());
    if (n < 1) throw std::invalid_argument("HoloSelfMap::polynomial: no components");
    for (const PowerSeries& c : components)
        if (c.dimension() != n)
            throw std::invalid_argument("HoloSelfMap::polynomial: component dimension mismatch");
    HoloSelfMap phi;
    phi.kind_ = Kind::Polynomial;
    phi.dimension_ = n;
    phi.components_ = std::move(components);
    for (const PowerSeries& c : phi.components_) {
        phi.component_radials_.push_back(c.radial_derivative());
        phi.component_gradients_.push_back(c.gradient());
    }
    return phi;
}

HoloSelfMap HoloSelfMap::closed_form(int n, ValueFn value, RadialFn radial,
                                     std::optional<double> range_margin) {
    if (n < 1) throw std::invalid_argument("HoloSelfMap::closed_form: dimension must be >= 1");
    if (!value || !radial) throw std::invalid_argument("HoloSelfMap::closed_form: missing evaluator");
    HoloSelfMap phi;
    phi.kind_ = Kind::ClosedForm;
    phi.dimension_ = n;
    phi.value_fn_ = std::move(value);
    phi.radial_fn_ = std::move(radial);
    phi.range_margin_ = range_margin;
    return phi;
}

Point HoloSelfMap::value(const Point& z) const {
    if (z.dim() != dimension_) throw std::invalid_argument("HoloSelfMap::value: dimension mismatch");
    Point w = Point::zero(dimension_);
    switch (kind_) {
        case Kind::Polynomial:
            for (int k = 0; k < dimension_; ++k)
                w[k] = components_[static_cast<std::size_t>(k)].evaluate(z);
            break;
        case Kind::Linear:
            for (int k = 0; k < dimension_; ++k) {
                Cplx s(0.0, 0.0);
                for (int j = 0; j < dimension_; ++j)
                    s += matrix_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] * z[j];
                w[k] = s;
            }
            break;
        case Kind::ClosedForm:
            w = value_fn_(z);
            break;
    }
    const double norm = ball_norm(w);
    if (norm >= 1.0) throw RangeViolation(format_point(z), norm);
    return w;
}

std::vector<Cplx> HoloSelfMap::radial(const Point& z) const {
    if (z.dim() != dimension_) throw std::invalid_argument("HoloSelfMap::radial: dimension mismatch");
    std::vector<Cplx> out(static_cast<std::size_t>(dimension_));
    switch (kind_) {
        case Kind::Polynomial:
            for (int k = 0; k < dimension_; ++k)
                out[static_cast<std::size_t>(k)] = component_radials_[static_cast<std::size_t>(k)].evaluate(z);
            break;
        case Kind::Linear:
            // Each component is 1-homogeneous, so R phi = phi.
            for (int k = 0; k < dimension_; ++k) {
                Cplx s(0.0, 0.0);
                for (int j = 0; j < dimension_; ++j)
                    s += matrix_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] * z[j];
                out[static_cast<std::size_t>(k)] = s;
            }
            break;
        case Kind::ClosedForm:
            out = radial_fn_(z);
            break;
    }
    return out;
}

std::vector<std::vector<Cplx>> HoloSelfMap::jacobian(const Point& z) const {
    if (z.dim() != dimension_) throw std::invalid_argument("HoloSelfMap::jacobian: dimension mismatch");
    std::vector<std::vector<Cplx>> out(static_cast<std::size_t>(dimension_),
                                       std::vector<Cplx>(static_cast<std::size_t>(dimension_)));
    switch (kind_) {
        case Kind::Polynomial:
            for (int k = 0; k < dimension_; ++k)
                for (int j = 0; j < dimension_; ++j)
                    out[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] =
                        component_gradients_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]
                            .evaluate(z);
            break;
        case Kind::Linear:
            out = matrix_;
            break;
        case Kind::ClosedForm:
            throw UnsupportedOperation("jacobian unavailable for closed-form maps");
    }
    return out;
}

std::optional<double> HoloSelfMap::certified_sup() const {
    switch (kind_) {
        case Kind::Linear:
            return largest_singular_value(matrix_);
        case Kind::Polynomial: {
            double sum2 = 0.0;
            for (const PowerSeries& c : components_) {
                double l1 = 0.0;
                for (const auto& [alpha, v] : c.terms()) l1 += std::abs(v);
                sum2 += l1 * l1;
            }
            return std::sqrt(sum2);
        }
        case Kind::ClosedForm:
            if (range_margin_) return 1.0 - *range_margin_;
            return std::nullopt;
    }
    return std::nullopt;
}

const std::vector<PowerSeries>& HoloSelfMap::components() const {
    if (kind_ != Kind::Polynomial)
        throw UnsupportedOperation("components only stored for polynomial maps");
    return components_;
}

const std::vector<std::vector<Cplx>>& HoloSelfMap::matrix() const {
    if (kind_ != Kind::Linear) throw UnsupportedOperation("matrix only stored for linear maps");
    return matrix_;
}

std::vector<PowerSeries> HoloSelfMap::as_polynomial() const {
    if (kind_ == Kind::Polynomial) return components_;
    if (kind_ == Kind::Linear) {
        std::vector<PowerSeries> comps;
        for (int k = 0; k < dimension_; ++k) {
            PowerSeries c(dimension_);
            for (int j = 0; j < dimension_; ++j) {
                const Cplx a = matrix_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                if (a != Cplx(0.0, 0.0)) c += a * PowerSeries::coordinate(dimension_, j);
            }
            comps.push_back(std::move(c));
        }
        return comps;
    }
    throw UnsupportedOperation("closed-form maps have no polynomial representation");
}

double largest_singular_value(const std::vector<std::vector<Cplx>>& matrix,
                              std::vector<Cplx>* right_vector) {
    const int n = static_cast<int>(matrix.size());
    // Power iteration on A^H A with a fixed, generic start vector.
    std::vector<Cplx> v(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = Cplx(1.0 + 0.013 * k, 0.007 * (k + 1));

    auto normalize = [&](std::vector<Cplx>& x) {
        double s = 0.0;
        for (const Cplx& c : x) s += std::norm(c);
        s = std::sqrt(s);
        if (s == 0.0) {
            x[0] = Cplx(1.0, 0.0);
            return;
        }
        for (Cplx& c : x) c /= s;
    };
    normalize(v);

    std::vector<Cplx> av(static_cast<std::size_t>(n)), hv(static_cast<std::size_t>(n));
    double sigma2 = 0.0;
    for (int iter = 0; iter < 400; ++iter) {
        for (int k = 0; k < n; ++k) {
            Cplx s(0.0, 0.0);
            for (int j = 0; j < n; ++j)
                s += matrix[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] *
                     v[static_cast<std::size_t>(j)];
            av[static_cast<std::size_t>(k)] = s;
        }
        for (int j = 0; j < n; ++j) {
            Cplx s(0.0, 0.0);
            for (int k = 0; k < n; ++k)
                s += std::conj(matrix[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) *
                     av[static_cast<std::size_t>(k)];
            hv[static_cast<std::size_t>(j)] = s;
        }
        double num = 0.0;
        for (int j = 0; j < n; ++j) num += (std::conj(v[static_cast<std::size_t>(j)]) *
                                            hv[static_cast<std::size_t>(j)]).real();
        sigma2 = std::max(num, 0.0);
        v = hv;
        normalize(v);
    }
    if (right_vector) *right_vector = v;
    return std::sqrt(sigma2);
}

MapValidation validate_self_map(const HoloSelfMap& phi, const SamplingGrid& grid) {
    MapValidation report;
    if (phi.kind() == HoloSelfMap::Kind::Linear) {
        std::vector<Cplx> v;
        report.sup_estimate = largest_singular_value(phi.matrix(), &v);
        report.argmax = Point(v);
        report.certified = true;
        report.pass = report.sup_estimate <= 1.0 + 1e-12;
        return report;
    }
    report.certified = false;
    double best = -1.0;
    for (const Point& z : grid.points()) {
        Point w = Point::zero(phi.dimension());
        double norm = 0.0;
        try {
            w = phi.value(z);
            norm = ball_norm(w);
        } catch (const RangeViolation& rv) {
            norm = rv.norm();
        }
        if (norm > best) {
            best = norm;
            report.argmax = z;
        }
    }
    report.sup_estimate = best;
    report.pass = best <= report.threshold;
    return report;
}

// ---------------------------------------------------------------------------
// Symbol

Symbol Symbol::polynomial(PowerSeries g) {
    const MultiIndex origin(std::vector<std::uint32_t>(static_cast<std::size_t>(g.dimension()), 0));
    if (g.coefficient(origin) != Cplx(0.0, 0.0))
        throw std::invalid_argument("Symbol: g(0) must be 0 (nonzero constant term)");
    Symbol s;
    s.kind_ = Kind::Polynomial;
    s.dimension_ = g.dimension();
    s.poly_ = std::make_shared<PowerSeriesFunction>(std::move(g));
    return s;
}

Symbol Symbol::log_form(Point b, int power) {
    if (b.dim() < 1) throw std::invalid_argument("Symbol::log_form: empty direction");
    if (ball_norm(b) >= 1.0) throw std::invalid_argument("Symbol::log_form: |b| must be < 1");
    if (power < 1) throw std::invalid_argument("Symbol::log_form: power must be >= 1");
    Symbol s;
    s.kind_ = Kind::LogForm;
    s.dimension_ = b.dim();
    s.b_ = std::move(b);
    s.power_ = power;
    return s;
}

const PowerSeries& Symbol::series() const {
    if (kind_ != Kind::Polynomial)
        throw UnsupportedOperation("Symbol::series: log-form symbol has no coefficient table");
    return poly_->series();
}

Cplx Symbol::value(const Point& z) const {
    if (kind_ == Kind::Polynomial) return poly_->value(z);
    return cpow_int(log_recip(inner_product(z, b_)), power_);
}

Cplx Symbol::radial(const Point& z) const {
    if (kind_ == Kind::Polynomial) return poly_->radial(z);
    const Cplx u = inner_product(z, b_);
    const Cplx L = log_recip(u);
    return u * static_cast<double>(power_) * cpow_int(L, power_ - 1) / (Cplx(1.0, 0.0) - u);
}

Cplx Symbol::radial2(const Point& z) const {
    if (kind_ == Kind::Polynomial) return poly_->radial2(z);
    const Cplx u = inner_product(z, b_);
    const Cplx L = log_recip(u);
    const Cplx om = Cplx(1.0, 0.0) - u;
    const double p = static_cast<double>(power_);
    const Cplx g1 = p * cpow_int(L, power_ - 1) / om;
    Cplx g2 = p * cpow_int(L, power_ - 1) / (om * om);
    if (power_ >= 2) g2 += p * (p - 1.0) * cpow_int(L, power_ - 2) / (om * om);
    return u * g1 + u * u * g2;
}

std::vector<Cplx> Symbol::gradient(const Point& z) const {
    if (kind_ == Kind::Polynomial) return poly_->gradient(z);
    const Cplx u = inner_product(z, b_);
    const Cplx g1 = static_cast<double>(power_) * cpow_int(log_recip(u), power_ - 1) /
                    (Cplx(1.0, 0.0) - u);
    std::vector<Cplx> out(static_cast<std::size_t>(dimension_));
    for (int k = 0; k < dimension_; ++k) out[static_cast<std::size_t>(k)] = std::conj(b_[k]) * g1;
    return out;
}

std::vector<Cplx> Symbol::radial_gradient(const Point& z) const {
    if (kind_ == Kind::Polynomial) return poly_->radial_gradient(z);
    const Cplx u = inner_product(z, b_);
    const Cplx L = log_recip(u);
    const Cplx om = Cplx(1.0, 0.0) - u;
    const double p = static_cast<double>(power_);
    const Cplx g1 = p * cpow_int(L, power_ - 1) / om;
    Cplx g2 = p * cpow_int(L, power_ - 1) / (om * om);
    if (power_ >= 2) g2 += p * (p - 1.0) * cpow_int(L, power_ - 2) / (om * om);
    const Cplx d = g1 + u * g2; // d/du of u g'(u)
    std::vector<Cplx> out(static_cast<std::size_t>(dimension_));
    for (int k = 0; k < dimension_; ++k) out[static_cast<std::size_t>(k)] = std::conj(b_[k]) * d;
    return out;
}

// ---------------------------------------------------------------------------
// Test functions

Cplx h_scalar(Cplx zeta) {
    if (std::abs(zeta) >= 1.0)
        throw std::domain_error("h_scalar: |zeta| must be < 1");
    const Cplx L = log_recip(zeta);
    const Cplx t = Cplx(1.0, 0.0) + L;
    return (zeta - Cplx(1.0, 0.0)) * (t * t + Cplx(1.0, 0.0));
}

TestFunction::TestFunction(TestFamily family, Point a, QuadratureConfig value_quad)
    : family_(family), a_(std::move(a)), quad_(value_quad) {
    const double na = ball_norm(a_);
    if (na == 0.0) throw std::invalid_argument("TestFunction: parameter a must be nonzero");
    if (na >= 1.0) throw std::invalid_argument("TestFunction: parameter a must lie in the ball");
    a_norm2_ = na * na;
    log_norm_ = -std::log1p(-a_norm2_); // log 1/(1-|a|^2) > 0
    scale_ = 1.0 / (a_norm2_ * log_norm_);
}

void TestFunction::check_point(const Point& z) const {
    if (z.dim() != a_.dim()) throw std::invalid_argument("TestFunction: point dimension mismatch");
    if (ball_norm(z) >= 1.0) throw std::domain_error("TestFunction: |z| must be < 1");
}

Cplx TestFunction::profile_value(Cplx u) const {
    const Cplx base = h_scalar(u) * scale_;
    switch (family_) {
        case TestFamily::HA:
            return base;
        case TestFamily::FA: {
            const Cplx integral = integrate_unit_checked(
                [&](double t) { return log_recip(t * u) / t; }, quad_);
            return base - integral;
        }
        case TestFamily::FK: {
            const Cplx integral = integrate_unit_checked(
                [&](double t) { return cpow_int(log_recip(t * u), 3) / t; }, quad_);
            return base - integral / (log_norm_ * log_norm_);
        }
    }
    return base;
}

Cplx TestFunction::profile_radial(Cplx u) const {
    const Cplx L = log_recip(u);
    const Cplx base = scale_ * u * L * L;
    switch (family_) {
        case TestFamily::HA:
            return base;
        case TestFamily::FA:
            return base - L;
        case TestFamily::FK:
            return base - L * L * L / (log_norm_ * log_norm_);
    }
    return base;
}

Cplx TestFunction::profile_radial2(Cplx u) const {
    const Cplx L = log_recip(u);
    const Cplx om = Cplx(1.0, 0.0) - u;
    const Cplx base = scale_ * (u * L * L + 2.0 * u * u * L / om);
    switch (family_) {
        case TestFamily::HA:
            return base;
        case TestFamily::FA:
            return base - u / om;
        case TestFamily::FK:
            return base - 3.0 * u * L * L / (om * log_norm_ * log_norm_);
    }
    return base;
}

Cplx TestFunction::value(const Point& z) const {
    check_point(z);
    return profile_value(inner_product(z, a_));
}

Cplx TestFunction::radial(const Point& z) const {
    check_point(z);
    return profile_radial(inner_product(z, a_));
}

Cplx TestFunction::radial2(const Point& z) const {
    check_point(z);
    return profile_radial2(inner_product(z, a_));
}

std::vector<Cplx> TestFunction::gradient(const Point& z) const {
    check_point(z);
    const Cplx u = inner_product(z, a_);
    const Cplx L = log_recip(u);
    Cplx sprime = scale_ * L * L; // d/du of the h part
    switch (family_) {
        case TestFamily::HA:
            break;
        case TestFamily::FA:
            sprime -= log_recip_over_u(u);
            break;
        case TestFamily::FK: {
            const Cplx lr = log_recip_over_u(u);
            sprime -= u * u * lr * lr * lr / (log_norm_ * log_norm_);
            break;
        }
    }
    std::vector<Cplx> out(static_cast<std::size_t>(a_.dim()));
    for (int k = 0; k < a_.dim(); ++k) out[static_cast<std::size_t>(k)] = std::conj(a_[k]) * sprime;
    return out;
}

std::vector<Cplx> TestFunction::radial_gradient(const Point& z) const {
    check_point(z);
    const Cplx u = inner_product(z, a_);
    const Cplx L = log_recip(u);
    const Cplx om = Cplx(1.0, 0.0) - u;
    Cplx rprime = scale_ * (L * L + 2.0 * u * L / om);
    switch (family_) {
        case TestFamily::HA:
            break;
        case TestFamily::FA:
            rprime -= Cplx(1.0, 0.0) / om;
            break;
        case TestFamily::FK:
            rprime -= 3.0 * L * L / (om * log_norm_ * log_norm_);
            break;
    }
    std::vector<Cplx> out(static_cast<std::size_t>(a_.dim()));
    for (int k = 0; k < a_.dim(); ++k) out[static_cast<std::size_t>(k)] = std::conj(a_[k]) * rprime;
    return out;
}

TestFamily test_family_from_string(const std::string& name) {
    if (name == "h_a") return TestFamily::HA;
    if (name == "f_a") return TestFamily::FA;
    if (name == "f_k") return TestFamily::FK;
    throw std::invalid_argument("unknown test function family: " + name);
}

std::string to_string(TestFamily family) {
    switch (family) {
        case TestFamily::HA: return "h_a";
        case TestFamily::FA: return "f_a";
        case TestFamily::FK: return "f_k";
    }
    return "?";
}

} // namespace hbops
