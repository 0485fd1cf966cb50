#include "weylinc/numeric.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "weylinc/core.hpp"

namespace weylinc {

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw config_error("linear_fit: size mismatch");
    const std::size_t n = x.size();
    if (n < 2)
        throw numeric_error("linear_fit: need at least 2 points");

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double dx = x[i] - mx;
        double dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0)
        throw numeric_error("linear_fit: degenerate abscissa");

    LinearFit fit;
    fit.n = n;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;

    double sse = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = y[i] - (fit.intercept + fit.slope * x[i]);
        sse += r * r;
    }
    fit.r_squared = syy > 0.0 ? 1.0 - sse / syy : 1.0;
    fit.slope_stderr = n > 2 ? std::sqrt(sse / static_cast<double>(n - 2) / sxx) : 0.0;
    return fit;
}

namespace {

Quadrature make_gauss_legendre(int n) {
    // Newton iteration on Legendre polynomials, nodes mapped from [-1,1]
    // to [0,1].
    Quadrature q;
    q.nodes.resize(static_cast<std::size_t>(n));
    q.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double p_prime = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = t;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            p_prime = n * (t * p1 - p0) / (t * t - 1.0);
            double dt = p1 / p_prime;
            t -= dt;
            if (std::fabs(dt) < 1e-15)
                break;
        }
        double w = 2.0 / ((1.0 - t * t) * p_prime * p_prime);
        q.nodes[static_cast<std::size_t>(i)] = 0.5 * (1.0 - t);  // descending t: ascending x
        q.weights[static_cast<std::size_t>(i)] = 0.5 * w;
    }
    return q;
}

}  // namespace

const Quadrature& gauss_legendre_01(int n) {
    static std::mutex mutex;
    static std::map<int, Quadrature> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, make_gauss_legendre(n)).first;
    return it->second;
}

}  // namespace weylinc
