#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "weylinc/core.hpp"
#include "weylinc/numeric.hpp"

namespace weylinc {

enum class MollifierMode { Spatial, FourierSeries };

/// Periodization of the scaled standard bump: rho_delta(x) =
/// delta^{-d} sum_k rho(delta^{-1}(x-k)), with rho(x) = C exp(-1/(1-|x|^2))
/// normalized to unit integral over R^d.  Poisson summation identifies the
/// Fourier coefficients of rho_delta with rho_hat(delta k), which is what the
/// FourierSeries mode evaluates.
class Mollifier {
public:
    Mollifier(double delta, int dim);

    double delta() const { return delta_; }
    int dim() const { return dim_; }

    /// Floor of the normalized base profile on the half-radius ball.
    double floor_constant() const { return floor_c_; }

    /// Normalized base profile at radius r (0 outside [0,1)).
    double base_profile(double r) const;

    /// rho_hat at radial frequency s >= 0 (real by radial symmetry).
    /// Cached by the integer squared modulus when called through the series.
    double base_transform(double s) const;

    double value_spatial(std::span<const double> x) const;

    /// Truncated Fourier series over |k|_inf <= truncation.
    /// Call precompute_series(truncation) first if evaluating many points;
    /// the first evaluation otherwise builds the coefficient table serially.
    double value_fourier(std::span<const double> x, int truncation) const;

    void precompute_series(int truncation) const;

private:
    double coefficient(long long k_sq) const;  // rho_hat(delta*sqrt(k_sq))

    double delta_;
    int dim_;
    double norm_;     // 1 / integral of the raw bump over R^d
    double floor_c_;  // normalized bump value at radius 1/2
    mutable std::vector<double> coeff_table_;  // indexed by squared modulus
    mutable long long table_max_sq_ = -1;
};

double mollifier_value(const Mollifier& m, std::span<const double> x, MollifierMode mode,
                       int truncation = 0);

/// Fourier transform of the annulus indicator {a <= |x| <= b} at radial
/// frequency |k| (real, radial).  d in {2,3}; k = 0 gives the volume.
double annulus_fourier_radial(double a, double b, int d, double k_norm);
double annulus_fourier(double a, double b, int d, std::span<const int> k);

/// Fourier transform of the unit-mass surface measure of the radius-r sphere.
/// d = 2: J_0(2 pi r |k|); d = 3: sinc form sin(2 pi r |k|)/(2 pi r |k|).
double sphere_measure_fourier_radial(double r, int d, double k_norm);
double sphere_measure_fourier(double r, int d, std::span<const int> k);

/// Normalized remainder bound of the annulus theorem:
///   bound = delta_star + N^{-2 gamma} delta_star^{-(d-1)/2 - 2 eps},
/// optimized at delta_star = N^{-4 gamma/(d+1)}.  The count-level bound is
/// N^2 * bound; count_exponent is the predicted log-log slope 2 - 4g/(d+1).
struct RemainderBound {
    double delta_star = 0.0;
    double boundary_term = 0.0;
    double oscillation_term = 0.0;
    double bound = 0.0;
    double count_exponent = 0.0;
};

RemainderBound theorem1_remainder_bound(double gamma, int d, std::size_t n, double eps);

/// Slab theorem analogue: delta_star = N^{-gamma}, bound N^{-gamma+eps},
/// count-level exponent 2 - gamma + eps.
RemainderBound theorem2_remainder_bound(double gamma, std::size_t n, double eps);

/// Tensor bump cutoff: prod_i phi((x_i - 1/2)/0.4) with
/// phi(t) = exp(1 - 1/(1-t^2)) for |t| < 1; smooth, supported in [0.1,0.9]^d,
/// equal to 1 at the center.
double bump_psi(std::span<const double> x);
double bump_psi_1d(double t);

/// Log-log decay fit of a radial transform over integer moduli
/// [k_min, k_max]; values below `floor_drop` in magnitude are excluded
/// (exact zeros of the oscillating transforms).
struct DecayFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double k_min = 0.0;
    double k_max = 0.0;
    std::size_t points_used = 0;
};

enum class TransformKind { AnnulusIndicator, SphereMeasure };

DecayFit fit_transform_decay(TransformKind kind, double a, double b, int d, int k_min,
                             int k_max, double floor_drop = 1e-14);

/// Samples of a radial transform at integer moduli, for CSV export.
struct RadialSample {
    double k_norm;
    double value;
};
std::vector<RadialSample> sample_transform(TransformKind kind, double a, double b, int d,
                                           int k_min, int k_max);

}  // namespace weylinc
