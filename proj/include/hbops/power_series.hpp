#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hbops/geometry.hpp"
#include "hbops/types.hpp"

namespace hbops {

struct MultiIndex {
    std::vector<std::uint32_t> exponents;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<std::uint32_t> e) : exponents(std::move(e)) {}

    int length() const { return static_cast<int>(exponents.size()); }
    int degree() const {
        int s = 0;
        for (std::uint32_t e : exponents) s += static_cast<int>(e);
        return s;
    }
    bool operator<(const MultiIndex& o) const { return exponents < o.exponents; }
    bool operator==(const MultiIndex& o) const { return exponents == o.exponents; }
};

// Holomorphic polynomial in n complex variables as a canonical multi-index
// coefficient table: no stored zero coefficients, all indices of length n.
class PowerSeries {
public:
    using TermMap = std::map<MultiIndex, Cplx>;

    explicit PowerSeries(int n);
    static PowerSeries zero(int n) { return PowerSeries(n); }
    static PowerSeries constant(int n, Cplx c);
    static PowerSeries coordinate(int n, int j);
    static PowerSeries monomial(MultiIndex alpha, Cplx c);

    int dimension() const { return dimension_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const; // 0 for the zero polynomial

    Cplx coefficient(const MultiIndex& alpha) const;
    void set_coefficient(const MultiIndex& alpha, Cplx c); // drops exact zeros

    Cplx evaluate(const Point& z) const;

    // Rf: coefficient of alpha scaled by |alpha|; the constant term vanishes.
    PowerSeries radial_derivative() const;
    PowerSeries iterated_radial(int m) const;

    // (d/dz_1 f, ..., d/dz_n f).
    std::vector<PowerSeries> gradient() const;

    // f = sum_k part_k with part_k the degree-k terms; zero parts omitted.
    std::map<int, PowerSeries> homogeneous_parts() const;

    // Exact polynomial composition f(phi_1, ..., phi_n). All components must
    // share one dimension; total degree of the result is capped.
    PowerSeries compose(const std::vector<PowerSeries>& phi, int degree_cap = kDefaultDegreeCap) const;

    PowerSeries& operator+=(const PowerSeries& o);
    PowerSeries& operator-=(const PowerSeries& o);
    PowerSeries& operator*=(Cplx c);

    bool operator==(const PowerSeries& o) const {
        return dimension_ == o.dimension_ && terms_ == o.terms_;
    }

    static constexpr int kDefaultDegreeCap = 64;

private:
    int dimension_;
    TermMap terms_;
};

PowerSeries operator+(PowerSeries a, const PowerSeries& b);
PowerSeries operator-(PowerSeries a, const PowerSeries& b);
PowerSeries operator*(PowerSeries a, Cplx c);
PowerSeries operator*(Cplx c, PowerSeries a);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

} // namespace hbops
