#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace hbops {

using Cplx = std::complex<double>;

// A holomorphic map sent a point outside the closed unit ball.
class RangeViolation : public std::runtime_error {
public:
    RangeViolation(std::string witness, double norm)
        : std::runtime_error("self-map range violation: |phi(z)| = " + std::to_string(norm) +
                             " >= 1 at z = " + witness),
          witness_(std::move(witness)), norm_(norm) {}
    const std::string& witness() const { return witness_; }
    double norm() const { return norm_; }

private:
    std::string witness_;
    double norm_;
};

// Adaptive quadrature ran out of subdivision depth before reaching the
// requested tolerance; carries the best value and the achieved error.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(Cplx value, double achieved, double requested)
        : std::runtime_error("quadrature did not converge: achieved error " +
                             std::to_string(achieved) + " > requested " +
                             std::to_string(requested)),
          value_(value), achieved_(achieved) {}
    Cplx value() const { return value_; }
    double achieved_error() const { return achieved_; }

private:
    Cplx value_;
    double achieved_;
};

class UnsupportedOperation : public std::logic_error {
public:
    explicit UnsupportedOperation(const std::string& what) : std::logic_error(what) {}
};

} // namespace hbops
