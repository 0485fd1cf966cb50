#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace weylinc {

/// Neumaier-compensated accumulator.  The carried compensation term is part
/// of the state, so a fold can be suspended and resumed (checkpointed sums)
/// with results bit-identical to a single uninterrupted left-to-right pass.
class KahanSum {
public:
    void add(double v) {
        double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Compensated complex accumulator with the same resumable-state property.
class KahanComplex {
public:
    void add(std::complex<double> v) {
        re_.add(v.real());
        im_.add(v.imag());
    }

    std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
    KahanSum re_;
    KahanSum im_;
};

/// Ordinary least squares y = intercept + slope*x.
struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double slope_stderr = 0.0;
    std::size_t n = 0;
};

/// Fits a line to (x,y); requires at least 2 points (3 for a finite stderr).
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

/// Nodes and weights of the n-point Gauss-Legendre rule on [0,1].
/// Computed once per n and cached; thread-safe.
struct Quadrature {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const Quadrature& gauss_legendre_01(int n);

}  // namespace weylinc
