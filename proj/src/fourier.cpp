#include "weylinc/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "weylinc/bessel.hpp"
#include "weylinc/parallel.hpp"

namespace weylinc {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

/// Raw (unnormalized) bump exp(-1/(1-r^2)) on [0,1).
inline double raw_bump(double r) {
    if (r >= 1.0)
        return 0.0;
    return std::exp(-1.0 / (1.0 - r * r));
}

/// Composite Gauss-Legendre integral of f over [0,1]; `panels` subintervals
/// of a 64-node rule.
template <typename F>
double integrate01(const F& f, int panels) {
    const Quadrature& rule = gauss_legendre_01(64);
    double total = 0.0;
    double width = 1.0 / panels;
    for (int p = 0; p < panels; ++p) {
        double left = p * width;
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            acc += rule.weights[i] * f(left + width * rule.nodes[i]);
        total += width * acc;
    }
    return total;
}

/// Panels needed to resolve s oscillation cycles over [0,1]; a 64-node panel
/// handles ~24 cycles with error at machine level.
inline int panels_for(double s) {
    return 2 + static_cast<int>(s / 24.0);
}

double surface_area(int d) {
    // |S^{d-1}| = d * omega_d; d = 1 gives the two endpoint "sphere".
    return d * unit_ball_volume(d);
}

}  // namespace

Mollifier::Mollifier(double delta, int dim) : delta_(delta), dim_(dim) {
    if (!(delta > 0.0 && delta < 1.0))
        throw config_error("mollifier: delta must be in (0,1)");
    if (dim < 1)
        throw config_error("mollifier: dim must be >= 1");
    double raw_integral =
        surface_area(dim) *
        integrate01([&](double r) { return raw_bump(r) * std::pow(r, dim - 1); }, 16);
    norm_ = 1.0 / raw_integral;
    floor_c_ = norm_ * raw_bump(0.5);
}

double Mollifier::base_profile(double r) const { return norm_ * raw_bump(r); }

double Mollifier::base_transform(double s) const {
    if (s == 0.0)
        return 1.0;  // unit integral by normalization
    int panels = panels_for(s);
    switch (dim_) {
        case 1:
            return norm_ * 2.0 *
                   integrate01([&](double r) { return raw_bump(r) * std::cos(two_pi * s * r); },
                               panels);
        case 2:
            return norm_ * two_pi *
                   integrate01(
                       [&](double r) { return raw_bump(r) * bessel_j0(two_pi * s * r) * r; },
                       panels);
        case 3:
            return norm_ * 2.0 * two_pi *
                   integrate01(
                       [&](double r) {
                           double z = two_pi * s * r;
                           double sinc = z == 0.0 ? 1.0 : std::sin(z) / z;
                           return raw_bump(r) * sinc * r * r;
                       },
                       panels);
        default:
            throw config_error("mollifier: transform implemented for d <= 3");
    }
}

double Mollifier::value_spatial(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dim_)
        throw config_error("mollifier: point dimension mismatch");
    // Periodization: only the 3^d neighbouring lattice shifts can reach the
    // support for delta < 1.
    double scale = std::pow(delta_, -dim_);
    std::vector<int> shift(static_cast<std::size_t>(dim_), -1);
    double total = 0.0;
    for (;;) {
        double rr = 0.0;
        for (int j = 0; j < dim_; ++j) {
            double y = x[static_cast<std::size_t>(j)] - shift[static_cast<std::size_t>(j)];
            rr += y * y;
        }
        double r = std::sqrt(rr) / delta_;
        if (r < 1.0)
            total += scale * base_profile(r);
        int j = dim_ - 1;
        while (j >= 0 && shift[static_cast<std::size_t>(j)] == 1) {
            shift[static_cast<std::size_t>(j)] = -1;
            --j;
        }
        if (j < 0)
            break;
        ++shift[static_cast<std::size_t>(j)];
    }
    return total;
}

void Mollifier::precompute_series(int truncation) const {
    if (truncation < 1)
        throw config_error("mollifier: truncation must be >= 1");
    long long t = truncation;
    long long max_sq = static_cast<long long>(dim_) * t * t;
    if (max_sq <= table_max_sq_)
        return;

    // Distinct squared moduli occurring in the box.
    std::vector<long long> needed;
    if (dim_ == 1) {
        for (long long m = 0; m <= t; ++m)
            needed.push_back(m * m);
    } else {
        std::vector<char> seen(static_cast<std::size_t>(max_sq) + 1, 0);
        for (long long k1 = 0; k1 <= t; ++k1)
            for (long long k2 = k1; k2 <= t; ++k2)
                seen[static_cast<std::size_t>(k1 * k1 + k2 * k2)] = 1;
        for (long long v = 0; v <= max_sq; ++v)
            if (seen[static_cast<std::size_t>(v)])
                needed.push_back(v);
    }

    std::vector<double> table(static_cast<std::size_t>(max_sq) + 1, 0.0);
    parallel_blocks(needed.size(), 64, 4, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            long long kk = needed[i];
            double s = delta_ * std::sqrt(static_cast<double>(kk));
            table[static_cast<std::size_t>(kk)] = base_transform(s);
        }
    });

    coeff_table_ = std::move(table);
    table_max_sq_ = max_sq;
}

double Mollifier::coefficient(long long k_sq) const {
    return coeff_table_[static_cast<std::size_t>(k_sq)];
}

double Mollifier::value_fourier(std::span<const double> x, int truncation) const {
    if (static_cast<int>(x.size()) != dim_)
        throw config_error("mollifier: point dimension mismatch");
    if (dim_ > 2)
        throw config_error("mollifier: Fourier-series mode implemented for d <= 2");
    precompute_series(truncation);

    const long long t = truncation;
    if (dim_ == 1) {
        KahanSum acc;
        acc.add(coefficient(0));
        double theta = two_pi * x[0];
        for (long long m = 1; m <= t; ++m)
            acc.add(2.0 * coefficient(m * m) * std::cos(theta * static_cast<double>(m)));
        return acc.value();
    }

    // Per-coordinate phase tables e^{2 pi i m x_j}, m = 0..t.
    std::vector<std::complex<double>> u1(static_cast<std::size_t>(t) + 1),
        u2(static_cast<std::size_t>(t) + 1);
    std::complex<double> b1{std::cos(two_pi * x[0]), std::sin(two_pi * x[0])};
    std::complex<double> b2{std::cos(two_pi * x[1]), std::sin(two_pi * x[1])};
    u1[0] = u2[0] = {1.0, 0.0};
    for (long long m = 1; m <= t; ++m) {
        u1[static_cast<std::size_t>(m)] = u1[static_cast<std::size_t>(m - 1)] * b1;
        u2[static_cast<std::size_t>(m)] = u2[static_cast<std::size_t>(m - 1)] * b2;
    }

    KahanSum acc;
    for (long long k1 = -t; k1 <= t; ++k1) {
        std::complex<double> f1 = k1 >= 0 ? u1[static_cast<std::size_t>(k1)]
                                          : std::conj(u1[static_cast<std::size_t>(-k1)]);
        for (long long k2 = -t; k2 <= t; ++k2) {
            double c = coefficient(k1 * k1 + k2 * k2);
            if (c == 0.0)
                continue;
            std::complex<double> f2 = k2 >= 0 ? u2[static_cast<std::size_t>(k2)]
                                              : std::conj(u2[static_cast<std::size_t>(-k2)]);
            acc.add(c * (f1.real() * f2.real() - f1.imag() * f2.imag()));
        }
    }
    return acc.value();
}

double mollifier_value(const Mollifier& m, std::span<const double> x, MollifierMode mode,
                       int truncation) {
    if (mode == MollifierMode::Spatial)
        return m.value_spatial(x);
    return m.value_fourier(x, truncation);
}

namespace {

/// Fourier transform of the Euclidean ball indicator of radius r at radial
/// frequency s.  Annuli with b < 1/2 sit inside the fundamental domain, so
/// the torus coefficient equals the R^d transform at integer frequencies.
double ball_fourier(double r, int d, double s) {
    if (s == 0.0)
        return unit_ball_volume(d) * std::pow(r, d);
    double z = two_pi * r * s;
    if (d == 2)
        return r * bessel_j1(z) / s;
    // d == 3
    return (std::sin(z) - z * std::cos(z)) / (2.0 * std::numbers::pi * std::numbers::pi * s * s * s);
}

}  // namespace

double annulus_fourier_radial(double a, double b, int d, double k_norm) {
    if (d != 2 && d != 3)
        throw config_error("annulus_fourier: only d in {2,3} has closed radial forms");
    if (!(a >= 0.01 && a < b && b < 0.5))
        throw config_error("annulus_fourier: need 1/100 <= a < b < 1/2");
    if (k_norm < 0.0)
        throw config_error("annulus_fourier: negative modulus");
    return ball_fourier(b, d, k_norm) - ball_fourier(a, d, k_norm);
}

double annulus_fourier(double a, double b, int d, std::span<const int> k) {
    double s = 0.0;
    for (int c : k)
        s += static_cast<double>(c) * static_cast<double>(c);
    return annulus_fourier_radial(a, b, d, std::sqrt(s));
}

double sphere_measure_fourier_radial(double r, int d, double k_norm) {
    if (d != 2 && d != 3)
        throw config_error("sphere_measure_fourier: only d in {2,3}");
    if (!(r >= 0.01 && r <= 0.5))
        throw config_error("sphere_measure_fourier: need 1/100 <= r <= 1/2");
    if (k_norm == 0.0)
        return 1.0;  // unit mass
    double z = two_pi * r * k_norm;
    if (d == 2)
        return bessel_j0(z);
    return std::sin(z) / z;
}

double sphere_measure_fourier(double r, int d, std::span<const int> k) {
    double s = 0.0;
    for (int c : k)
        s += static_cast<double>(c) * static_cast<double>(c);
    return sphere_measure_fourier_radial(r, d, std::sqrt(s));
}

RemainderBound theorem1_remainder_bound(double gamma, int d, std::size_t n, double eps) {
    if (!(gamma >= 0.0 && gamma <= 0.5))
        throw config_error("theorem1_remainder_bound: gamma must be in [0, 1/2]");
    if (d < 2)
        throw config_error("theorem1_remainder_bound: d must be >= 2");
    if (n < 2)
        throw config_error("theorem1_remainder_bound: N must be >= 2");
    RemainderBound r;
    double nn = static_cast<double>(n);
    r.delta_star = std::pow(nn, -4.0 * gamma / (d + 1));
    r.boundary_term = r.delta_star;
    r.oscillation_term =
        std::pow(nn, -2.0 * gamma) * std::pow(r.delta_star, -(d - 1) / 2.0 - 2.0 * eps);
    r.bound = r.boundary_term + r.oscillation_term;
    r.count_exponent = 2.0 - 4.0 * gamma / (d + 1) + eps;
    return r;
}

RemainderBound theorem2_remainder_bound(double gamma, std::size_t n, double eps) {
    if (!(gamma >= 0.0 && gamma <= 0.5))
        throw config_error("theorem2_remainder_bound: gamma must be in [0, 1/2]");
    if (n < 2)
        throw config_error("theorem2_remainder_bound: N must be >= 2");
    RemainderBound r;
    double nn = static_cast<double>(n);
    r.delta_star = std::pow(nn, -gamma);
    r.boundary_term = r.delta_star;
    r.oscillation_term = std::pow(r.delta_star, -eps) * std::pow(nn, -gamma);
    r.bound = std::pow(nn, -gamma + eps);
    r.count_exponent = 2.0 - gamma + eps;
    return r;
}

double bump_psi_1d(double t) {
    if (!(std::fabs(t) < 1.0))
        return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - t * t));
}

double bump_psi(std::span<const double> x) {
    double value = 1.0;
    for (double c : x) {
        value *= bump_psi_1d((c - 0.5) / 0.4);
        if (value == 0.0)
            return 0.0;
    }
    return value;
}

std::vector<RadialSample> sample_transform(TransformKind kind, double a, double b, int d,
                                           int k_min, int k_max) {
    if (k_min < 1 || k_max < k_min)
        throw config_error("sample_transform: need 1 <= k_min <= k_max");
    std::vector<RadialSample> samples;
    for (int k = k_min; k <= k_max; ++k) {
        double s = static_cast<double>(k);
        double value = kind == TransformKind::AnnulusIndicator
                           ? annulus_fourier_radial(a, b, d, s)
                           : sphere_measure_fourier_radial(a, d, s);
        samples.push_back({s, value});
    }
    return samples;
}

DecayFit fit_transform_decay(TransformKind kind, double a, double b, int d, int k_min,
                             int k_max, double floor_drop) {
    auto samples = sample_transform(kind, a, b, d, k_min, k_max);
    std::vector<double> log_k, log_v;
    for (const auto& s : samples) {
        double mag = std::fabs(s.value);
        if (mag < floor_drop)
            continue;  // lands on a zero of the oscillation
        log_k.push_back(std::log(s.k_norm));
        log_v.push_back(std::log(mag));
    }
    if (log_k.size() < 3)
        throw numeric_error("fit_transform_decay: too few usable moduli");
    LinearFit fit = linear_fit(log_k, log_v);
    DecayFit result;
    result.slope = fit.slope;
    result.intercept = fit.intercept;
    result.r_squared = fit.r_squared;
    result.k_min = k_min;
    result.k_max = k_max;
    result.points_used = log_k.size();
    return result;
}

}  // namespace weylinc
