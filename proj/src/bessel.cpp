#include "weylinc/bessel.hpp"

#include <cmath>
#include <numbers>

namespace weylinc {

namespace {

constexpr double kSeriesSwitch = 12.0;

/// Ascending series sum_m (-1)^m (x^2/4)^m / (m! (m+nu)!), nu in {0,1}.
/// Long double absorbs the cancellation up to the switch point.
long double ascending_series(long double x, int nu) {
    long double q = x * x / 4.0L;
    long double term = 1.0L;
    for (int m = 1; m <= nu; ++m)
        term /= m;  // 1/(nu)! for the m=0 term
    long double sum = term;
    for (int m = 1; m < 80; ++m) {
        term *= -q / (static_cast<long double>(m) * (m + nu));
        sum += term;
        if (std::fabs(term) < 1e-22L * std::fabs(sum) + 1e-30L)
            break;
    }
    return sum;
}

/// Hankel asymptotic expansion: J_nu(x) ~ sqrt(2/(pi x)) (P cos chi - Q sin chi)
/// with chi = x - (2 nu + 1) pi / 4.  Terms are added while they decrease.
double hankel_asymptotic(double x, int nu) {
    const double mu = 4.0 * nu * nu;
    const double inv8x = 1.0 / (8.0 * x);
    long double p = 1.0L, q = 0.0L;
    long double term = 1.0L;
    double prev = 1e30;
    for (int k = 1; k <= 40; ++k) {
        double odd = 2.0 * k - 1.0;
        // The ratio in double costs ~1e-17 relative per term, below the
        // expansion's truncation floor; the accumulation stays long double.
        term *= static_cast<long double>((mu - odd * odd) * inv8x / k);
        double mag = std::fabs(static_cast<double>(term));
        if (mag >= prev)
            break;  // asymptotic tail started growing
        prev = mag;
        switch (k % 4) {
            case 1: q += term; break;
            case 2: p -= term; break;
            case 3: q -= term; break;
            case 0: p += term; break;
        }
        if (mag < 1e-17)
            break;
    }
    // Trig and amplitude in double: their rounding is ~1e-16 relative, well
    // below the expansion's own truncation floor near the switch point.
    double chi = x - (2.0 * nu + 1.0) * std::numbers::pi / 4.0;
    double amplitude = std::sqrt(2.0 / (std::numbers::pi * x));
    return amplitude * (static_cast<double>(p) * std::cos(chi) -
                        static_cast<double>(q) * std::sin(chi));
}

}  // namespace

double bessel_j0(double x) {
    x = std::fabs(x);  // even
    if (x <= kSeriesSwitch)
        return static_cast<double>(ascending_series(x, 0));
    return hankel_asymptotic(x, 0);
}

double bessel_j1(double x) {
    double sign = x < 0.0 ? -1.0 : 1.0;  // odd
    x = std::fabs(x);
    if (x <= kSeriesSwitch)
        return sign * static_cast<double>(static_cast<long double>(x) / 2.0L *
                                          ascending_series(x, 1));
    return sign * hankel_asymptotic(x, 1);
}

}  // namespace weylinc
