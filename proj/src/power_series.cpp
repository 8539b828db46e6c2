#include "hbops/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace hbops {

namespace {

void check_same_dimension(const PowerSeries& a, const PowerSeries& b, const char* op) {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                    std::to_string(a.dimension()) + " vs " +
                                    std::to_string(b.dimension()) + ")");
}

Cplx int_pow(Cplx base, std::uint32_t e) {
    Cplx r(1.0, 0.0);
    while (e > 0) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

} // namespace

PowerSeries::PowerSeries(int n) : dimension_(n) {
    if (n < 1) throw std::invalid_argument("PowerSeries: dimension must be >= 1");
}

PowerSeries PowerSeries::constant(int n, Cplx c) {
    PowerSeries f(n);
    f.set_coefficient(MultiIndex(std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0)), c);
    return f;
}

PowerSeries PowerSeries::coordinate(int n, int j) {
    if (j < 0 || j >= n) throw std::invalid_argument("PowerSeries::coordinate: index out of range");
    std::vector<std::uint32_t> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(j)] = 1;
    return monomial(MultiIndex(std::move(e)), Cplx(1.0, 0.0));
}

PowerSeries PowerSeries::monomial(MultiIndex alpha, Cplx c) {
    PowerSeries f(alpha.length());
    f.set_coefficient(alpha, c);
    return f;
}

int PowerSeries::total_degree() const {
    int d = 0;
    for (const auto& [alpha, c] : terms_) d = std::max(d, alpha.degree());
    return d;
}

Cplx PowerSeries::coefficient(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Cplx(0.0, 0.0) : it->second;
}

void PowerSeries::set_coefficient(const MultiIndex& alpha, Cplx c) {
    if (alpha.length() != dimension_)
        throw std::invalid_argument("PowerSeries: multi-index length " + std::to_string(alpha.length()) +
                                    " does not match dimension " + std::to_string(dimension_));
    if (c == Cplx(0.0, 0.0))
        terms_.erase(alpha);
    else
        terms_[alpha] = c;
}

Cplx PowerSeries::evaluate(const Point& z) const {
    if (z.dim() != dimension_)
        throw std::invalid_argument("PowerSeries::evaluate: point dimension mismatch");
    Cplx s(0.0, 0.0);
    for (const auto& [alpha, c] : terms_) {
        Cplx t = c;
        for (int k = 0; k < dimension_; ++k) {
            const std::uint32_t e = alpha.exponents[static_cast<std::size_t>(k)];
            if (e) t *= int_pow(z[k], e);
        }
        s += t;
    }
    return s;
}

PowerSeries PowerSeries::radial_derivative() const {
    PowerSeries out(dimension_);
    for (const auto& [alpha, c] : terms_) {
        const int d = alpha.degree();
        if (d > 0) out.set_coefficient(alpha, static_cast<double>(d) * c);
    }
    return out;
}

PowerSeries PowerSeries::iterated_radial(int m) const {
    if (m < 1) throw std::invalid_argument("iterated_radial: order must be >= 1");
    PowerSeries out(dimension_);
    for (const auto& [alpha, c] : terms_) {
        const int d = alpha.degree();
        if (d == 0) continue;
        double s = 1.0;
        for (int i = 0; i < m; ++i) s *= static_cast<double>(d);
        out.set_coefficient(alpha, s * c);
    }
    return out;
}

std::vector<PowerSeries> PowerSeries::gradient() const {
    std::vector<PowerSeries> out(static_cast<std::size_t>(dimension_), PowerSeries(dimension_));
    for (const auto& [alpha, c] : terms_) {
        for (int j = 0; j < dimension_; ++j) {
            const std::uint32_t e = alpha.exponents[static_cast<std::size_t>(j)];
            if (e == 0) continue;
            MultiIndex beta = alpha;
            beta.exponents[static_cast<std::size_t>(j)] -= 1;
            auto& g = out[static_cast<std::size_t>(j)];
            g.set_coefficient(beta, g.coefficient(beta) + static_cast<double>(e) * c);
        }
    }
    return out;
}

std::map<int, PowerSeries> PowerSeries::homogeneous_parts() const {
    std::map<int, PowerSeries> parts;
    for (const auto& [alpha, c] : terms_) {
        const int d = alpha.degree();
        auto it = parts.find(d);
        if (it == parts.end()) it = parts.emplace(d, PowerSeries(dimension_)).first;
        it->second.set_coefficient(alpha, c);
    }
    return parts;
}

PowerSeries PowerSeries::compose(const std::vector<PowerSeries>& phi, int degree_cap) const {
    if (static_cast<int>(phi.size()) != dimension_)
        throw std::invalid_argument("compose: expected " + std::to_string(dimension_) +
                                    " components, got " + std::to_string(phi.size()));
    const int m = phi.front().dimension();
    for (const PowerSeries& c : phi)
        if (c.dimension() != m) throw std::invalid_argument("compose: components have mixed dimensions");

    // Worst-case degree bound before any multiplication is attempted.
    for (const auto& [alpha, c] : terms_) {
        long bound = 0;
        for (int k = 0; k < dimension_; ++k)
            bound += static_cast<long>(alpha.exponents[static_cast<std::size_t>(k)]) *
                     std::max(1, phi[static_cast<std::size_t>(k)].total_degree());
        if (bound > degree_cap)
            throw std::invalid_argument("compose: total degree " + std::to_string(bound) +
                                        " exceeds cap " + std::to_string(degree_cap));
    }

    // Cached powers of each component.
    std::vector<std::vector<PowerSeries>> powers(static_cast<std::size_t>(dimension_));
    for (int k = 0; k < dimension_; ++k)
        powers[static_cast<std::size_t>(k)].push_back(PowerSeries::constant(m, Cplx(1.0, 0.0)));

    auto power_of = [&](int k, std::uint32_t e) -> const PowerSeries& {
        auto& cache = powers[static_cast<std::size_t>(k)];
        while (cache.size() <= e) cache.push_back(cache.back() * phi[static_cast<std::size_t>(k)]);
        return cache[e];
    };

    PowerSeries out(m);
    for (const auto& [alpha, c] : terms_) {
        PowerSeries term = PowerSeries::constant(m, c);
        for (int k = 0; k < dimension_; ++k) {
            const std::uint32_t e = alpha.exponents[static_cast<std::size_t>(k)];
            if (e) term = term * power_of(k, e);
        }
        out += term;
    }
    if (out.total_degree() > degree_cap)
        throw std::invalid_argument("compose: result degree exceeds cap " + std::to_string(degree_cap));
    return out;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
    check_same_dimension(*this, o, "add");
    for (const auto& [alpha, c] : o.terms_) set_coefficient(alpha, coefficient(alpha) + c);
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
    check_same_dimension(*this, o, "subtract");
    for (const auto& [alpha, c] : o.terms_) set_coefficient(alpha, coefficient(alpha) - c);
    return *this;
}

PowerSeries& PowerSeries::operator*=(Cplx c) {
    if (c == Cplx(0.0, 0.0)) {
        terms_.clear();
        return *this;
    }
    for (auto& [alpha, v] : terms_) v *= c;
    return *this;
}

PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
PowerSeries operator*(PowerSeries a, Cplx c) { return a *= c; }
PowerSeries operator*(Cplx c, PowerSeries a) { return a *= c; }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    check_same_dimension(a, b, "multiply");
    PowerSeries out(a.dimension());
    for (const auto& [alpha, ca] : a.terms()) {
        for (const auto& [beta, cb] : b.terms()) {
            MultiIndex gamma = alpha;
            for (std::size_t k = 0; k < gamma.exponents.size(); ++k)
                gamma.exponents[k] += beta.exponents[k];
            out.set_coefficient(gamma, out.coefficient(gamma) + ca * cb);
        }
    }
    return out;
}

} // namespace hbops
