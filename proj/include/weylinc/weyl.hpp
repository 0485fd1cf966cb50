#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "weylinc/core.hpp"
#include "weylinc/numeric.hpp"

namespace weylinc {

/// The box of nonzero integer frequencies 0 < |k|_inf <= kmax, materialized
/// in lexicographic order (components from -kmax to kmax, last index fastest).
class FrequencySpec {
public:
    FrequencySpec(int dim, int kmax);

    int dim() const { return dim_; }
    int kmax() const { return kmax_; }
    std::size_t count() const { return vectors_.size() / static_cast<std::size_t>(dim_); }

    std::span<const int> vector(std::size_t i) const {
        return {vectors_.data() + i * static_cast<std::size_t>(dim_),
                static_cast<std::size_t>(dim_)};
    }

    /// Index of -k given the index of k (the box is symmetric).
    std::size_t negation_index(std::size_t i) const;

private:
    int dim_;
    int kmax_;
    std::vector<int> vectors_;
};

/// Euclidean norm of an integer frequency vector.
double frequency_norm(std::span<const int> k);

/// Resumable state of one exponential sum: the compensated fold over
/// e^{2 pi i k.v_n}.  Extending the fold over a further index range is
/// bit-identical to a single uninterrupted pass, which is the contract the
/// checkpointed profile relies on.
struct ExpSumState {
    KahanComplex acc;
    std::size_t next_index = 0;

    std::complex<double> value() const { return acc.value(); }
};

/// Adds terms for indices [state.next_index, n) of the sequence.
void exp_sum_extend(const PointSequence& seq, std::span<const int> k, std::size_t n,
                    ExpSumState& state);

/// S_N(k) = sum_{n=1}^{N} e^{2 pi i k.v_n}.  k = 0 gives N.
std::complex<double> exp_sum(const PointSequence& seq, std::span<const int> k, std::size_t n);

/// Table of S_N(k) over a frequency box at increasing checkpoints.
class WeylProfile {
public:
    WeylProfile(FrequencySpec freq, std::vector<std::size_t> checkpoints, double epsilon,
                std::vector<std::complex<double>> sums);

    const FrequencySpec& freq() const { return freq_; }
    const std::vector<std::size_t>& checkpoints() const { return checkpoints_; }
    double epsilon() const { return epsilon_; }

    std::complex<double> sum(std::size_t freq_index, std::size_t checkpoint_index) const {
        return sums_[freq_index * checkpoints_.size() + checkpoint_index];
    }

    double magnitude_over_n(std::size_t freq_index, std::size_t checkpoint_index) const {
        return std::abs(sum(freq_index, checkpoint_index)) /
               static_cast<double>(checkpoints_[checkpoint_index]);
    }

    /// M(N) = max over the box of |k|^{-eps} |S_N(k)| / N.
    double normalized_max(std::size_t checkpoint_index) const;

private:
    FrequencySpec freq_;
    std::vector<std::size_t> checkpoints_;
    double epsilon_;
    std::vector<std::complex<double>> sums_;
};

/// Computes the checkpointed sum table.  Each frequency's fold runs start to
/// finish on one thread in index order, so results do not depend on the
/// thread count.
WeylProfile weyl_profile(const PointSequence& seq, const FrequencySpec& freq,
                         std::vector<std::size_t> checkpoints, double epsilon,
                         int threads = 1);

/// Least-squares exponent of the profile: slope of log M(N) against log N.
struct GammaFit {
    double gamma_hat = 0.0;
    double intercept = 0.0;
    double stderr_ = 0.0;
    double r_squared = 0.0;
    double epsilon = 0.0;
    int kmax = 0;
    std::vector<std::size_t> checkpoints;
};

GammaFit estimate_gamma(const WeylProfile& profile);

/// Default frequency box size per dimension, keeping (2K+1)^d - 1 moderate.
int default_kmax(int dim);

/// Dirichlet-style search for a frequency q at which the one-dimensional sum
/// S(q)/N returns close to 1.  Scans q = 1..qmax minimizing |S(q)/N - 1| and
/// reports |S(q)|/N of the best q.  budget_limited is set when qmax is below
/// the ceil(eps^{-N}) pigeonhole budget, in which case the 1 - 2*pi*eps
/// guarantee does not apply.
struct AdversarialResult {
    std::uint64_t q = 0;
    double magnitude = 0.0;
    bool budget_limited = false;
};

AdversarialResult adversarial_frequency(std::span<const double> points, double eps,
                                        std::uint64_t qmax);

/// 4 exp(-|k|^{2 eps} N^{1-2 gamma} / 2), clamped to [0,1] for reporting.
double hoeffding_bound(std::span<const int> k, std::size_t n, double gamma, double eps);

}  // namespace weylinc
