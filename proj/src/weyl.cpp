#include "weylinc/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "weylinc/parallel.hpp"

namespace weylinc {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

/// e^{2 pi i x}.
inline std::complex<double> cis(double x) {
    double t = two_pi * x;
    return {std::cos(t), std::sin(t)};
}

/// base^m by sequential multiplication for m >= 0; conjugate for m < 0.
/// Sequential (not binary) powering, so the per-coordinate tables built by
/// the profile and the direct path of exp_sum produce bit-identical factors.
inline std::complex<double> unit_power(std::complex<double> base, int m) {
    bool neg = m < 0;
    int steps = neg ? -m : m;
    std::complex<double> z{1.0, 0.0};
    for (int i = 0; i < steps; ++i)
        z *= base;
    return neg ? std::conj(z) : z;
}

/// Phase factor e^{2 pi i k.v} as the product of per-coordinate powers.
inline std::complex<double> phase_term(std::span<const int> k, std::span<const double> v) {
    std::complex<double> z{1.0, 0.0};
    for (std::size_t j = 0; j < k.size(); ++j) {
        if (k[j] == 0)
            continue;
        z *= unit_power(cis(v[j]), k[j]);
    }
    return z;
}

}  // namespace

FrequencySpec::FrequencySpec(int dim, int kmax) : dim_(dim), kmax_(kmax) {
    if (dim < 1)
        throw config_error("FrequencySpec: dim must be >= 1");
    if (kmax < 1)
        throw config_error("FrequencySpec: empty frequency box (kmax < 1)");
    double count_estimate = std::pow(2.0 * kmax + 1.0, dim) - 1.0;
    if (count_estimate > 2e6)
        throw config_error("FrequencySpec: box of " + std::to_string(count_estimate) +
                           " vectors is too large");

    std::vector<int> current(static_cast<std::size_t>(dim), -kmax);
    for (;;) {
        bool all_zero = std::all_of(current.begin(), current.end(), [](int c) { return c == 0; });
        if (!all_zero)
            vectors_.insert(vectors_.end(), current.begin(), current.end());
        int j = dim - 1;
        while (j >= 0 && current[static_cast<std::size_t>(j)] == kmax) {
            current[static_cast<std::size_t>(j)] = -kmax;
            --j;
        }
        if (j < 0)
            break;
        ++current[static_cast<std::size_t>(j)];
    }
}

std::size_t FrequencySpec::negation_index(std::size_t i) const {
    // The lexicographic enumeration of the punctured box maps k -> -k by
    // reversal: index of -k is count()-1-i.
    return count() - 1 - i;
}

double frequency_norm(std::span<const int> k) {
    double s = 0.0;
    for (int c : k)
        s += static_cast<double>(c) * static_cast<double>(c);
    return std::sqrt(s);
}

void exp_sum_extend(const PointSequence& seq, std::span<const int> k, std::size_t n,
                    ExpSumState& state) {
    seq.require_length(n);
    if (static_cast<std::size_t>(seq.dim()) != k.size())
        throw config_error("exp_sum: frequency dimension mismatch");
    for (std::size_t i = state.next_index; i < n; ++i)
        state.acc.add(phase_term(k, seq.point(i)));
    state.next_index = n;
}

std::complex<double> exp_sum(const PointSequence& seq, std::span<const int> k, std::size_t n) {
    ExpSumState state;
    exp_sum_extend(seq, k, n, state);
    return state.value();
}

WeylProfile::WeylProfile(FrequencySpec freq, std::vector<std::size_t> checkpoints,
                         double epsilon, std::vector<std::complex<double>> sums)
    : freq_(std::move(freq)),
      checkpoints_(std::move(checkpoints)),
      epsilon_(epsilon),
      sums_(std::move(sums)) {}

double WeylProfile::normalized_max(std::size_t checkpoint_index) const {
    double best = 0.0;
    for (std::size_t i = 0; i < freq_.count(); ++i) {
        double weight = std::pow(frequency_norm(freq_.vector(i)), -epsilon_);
        double value = weight * magnitude_over_n(i, checkpoint_index);
        best = std::max(best, value);
    }
    return best;
}

WeylProfile weyl_profile(const PointSequence& seq, const FrequencySpec& freq,
                         std::vector<std::size_t> checkpoints, double epsilon, int threads) {
    if (checkpoints.empty())
        throw config_error("weyl_profile: no checkpoints");
    if (!std::is_sorted(checkpoints.begin(), checkpoints.end()) ||
        std::adjacent_find(checkpoints.begin(), checkpoints.end()) != checkpoints.end())
        throw config_error("weyl_profile: checkpoints must be strictly increasing");
    if (static_cast<std::size_t>(seq.dim()) != static_cast<std::size_t>(freq.dim()))
        throw config_error("weyl_profile: frequency box dimension mismatch");
    const std::size_t max_n = checkpoints.back();
    seq.require_length(max_n);

    const int dim = seq.dim();
    const int kmax = freq.kmax();
    const std::size_t nfreq = freq.count();
    const std::size_t ncheck = checkpoints.size();

    // Per-coordinate power tables u[n][j][m] = e^{2 pi i m v_{n,j}}, m = 0..K,
    // built by the same sequential recurrence the direct path uses.
    const std::size_t stride = static_cast<std::size_t>(kmax) + 1;
    std::vector<std::complex<double>> powers(max_n * static_cast<std::size_t>(dim) * stride);
    parallel_blocks(max_n, 1024, threads, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            auto v = seq.point(i);
            for (int j = 0; j < dim; ++j) {
                std::complex<double>* row =
                    powers.data() + (i * static_cast<std::size_t>(dim) +
                                     static_cast<std::size_t>(j)) * stride;
                std::complex<double> base = cis(v[static_cast<std::size_t>(j)]);
                row[0] = {1.0, 0.0};
                for (int m = 1; m <= kmax; ++m)
                    row[static_cast<std::size_t>(m)] = row[static_cast<std::size_t>(m - 1)] * base;
            }
        }
    });

    std::vector<std::complex<double>> sums(nfreq * ncheck);
    // One frequency per task: its fold over n runs in index order on a single
    // thread, so the table is identical for any thread count.
    parallel_blocks(nfreq, 8, threads, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t fi = begin; fi < end; ++fi) {
            auto k = freq.vector(fi);
            KahanComplex acc;
            std::size_t n = 0;
            for (std::size_t c = 0; c < ncheck; ++c) {
                for (; n < checkpoints[c]; ++n) {
                    std::complex<double> term{1.0, 0.0};
                    const std::complex<double>* point_rows =
                        powers.data() + n * static_cast<std::size_t>(dim) * stride;
                    for (int j = 0; j < dim; ++j) {
                        int m = k[static_cast<std::size_t>(j)];
                        if (m == 0)
                            continue;
                        const std::complex<double>* row =
                            point_rows + static_cast<std::size_t>(j) * stride;
                        term *= m > 0 ? row[static_cast<std::size_t>(m)]
                                      : std::conj(row[static_cast<std::size_t>(-m)]);
                    }
                    acc.add(term);
                }
                sums[fi * ncheck + c] = acc.value();
            }
        }
    });

    return WeylProfile(freq, std::move(checkpoints), epsilon, std::move(sums));
}

GammaFit estimate_gamma(const WeylProfile& profile) {
    const auto& checkpoints = profile.checkpoints();
    if (checkpoints.size() < 3)
        throw config_error("estimate_gamma: need at least 3 checkpoints");

    std::vector<double> log_n, log_m;
    for (std::size_t c = 0; c < checkpoints.size(); ++c) {
        double m = profile.normalized_max(c);
        if (m == 0.0)
            throw numeric_error("estimate_gamma: M(N) = 0 at N = " +
                                std::to_string(checkpoints[c]));
        log_n.push_back(std::log(static_cast<double>(checkpoints[c])));
        log_m.push_back(std::log(m));
    }

    LinearFit fit = linear_fit(log_n, log_m);
    GammaFit result;
    result.gamma_hat = -fit.slope;
    result.intercept = fit.intercept;
    result.stderr_ = fit.slope_stderr;
    result.r_squared = fit.r_squared;
    result.epsilon = profile.epsilon();
    result.kmax = profile.freq().kmax();
    result.checkpoints = checkpoints;
    return result;
}

int default_kmax(int dim) {
    switch (dim) {
        case 1: return 20;
        case 2: return 20;
        case 3: return 8;
        default: return 5;
    }
}

AdversarialResult adversarial_frequency(std::span<const double> points, double eps,
                                        std::uint64_t qmax) {
    if (points.empty())
        throw config_error("adversarial_frequency: no points");
    if (!(eps > 0.0 && eps < 1.0))
        throw config_error("adversarial_frequency: eps must be in (0,1)");
    if (qmax < 1)
        throw config_error("adversarial_frequency: qmax must be >= 1");

    const std::size_t n = points.size();
    const double inv_n = 1.0 / static_cast<double>(n);

    // Dirichlet pigeonhole budget ceil(eps^{-N}); compare in logs to dodge
    // overflow for large N.
    double log_budget = static_cast<double>(n) * std::log(1.0 / eps);
    bool budget_limited = std::log(static_cast<double>(qmax)) < log_budget;

    std::vector<std::complex<double>> base(n), z(n);
    for (std::size_t i = 0; i < n; ++i) {
        base[i] = cis(reduce_mod1(points[i]));
        z[i] = {1.0, 0.0};
    }

    std::uint64_t best_q = 1;
    double best_distance = std::numeric_limits<double>::infinity();
    double best_magnitude = 0.0;

    constexpr std::uint64_t resync_period = 4096;  // bounds multiplicative drift
    for (std::uint64_t q = 1; q <= qmax; ++q) {
        if (q % resync_period == 0) {
            for (std::size_t i = 0; i < n; ++i)
                z[i] = cis(reduce_mod1(static_cast<double>(q) * reduce_mod1(points[i])));
        } else {
            for (std::size_t i = 0; i < n; ++i)
                z[i] *= base[i];
        }
        std::complex<double> s{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i)
            s += z[i];
        s *= inv_n;
        double distance = std::abs(s - 1.0);
        if (distance < best_distance) {
            best_distance = distance;
            best_q = q;
            best_magnitude = std::abs(s);
        }
    }

    return {best_q, best_magnitude, budget_limited};
}

double hoeffding_bound(std::span<const int> k, std::size_t n, double gamma, double eps) {
    double norm = frequency_norm(k);
    if (norm == 0.0)
        throw config_error("hoeffding_bound: k must be nonzero");
    if (n < 1)
        throw config_error("hoeffding_bound: N must be >= 1");
    double exponent = std::pow(norm, 2.0 * eps) *
                      std::pow(static_cast<double>(n), 1.0 - 2.0 * gamma) / 2.0;
    double bound = 4.0 * std::exp(-exponent);
    return std::min(bound, 1.0);
}

}  // namespace weylinc
