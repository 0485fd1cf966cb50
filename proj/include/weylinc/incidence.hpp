#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "weylinc/core.hpp"

namespace weylinc {

/// Exact ordered-pair annulus count over the first n points:
/// #{(i,j) : a <= ||v_i - v_j|| <= b}.  O(n^2) reference path.
/// The diagonal never qualifies since a > 0.
std::uint64_t count_annulus_pairs(const PointSequence& seq, double a, double b,
                                  std::size_t n, int threads = 1);

/// Same value through a uniform cell grid over the torus, pruning cell pairs
/// whose distance range cannot meet [a,b].  Agrees with the brute-force
/// counter exactly: surviving pairs are tested with the same predicate.
std::uint64_t count_annulus_pairs_grid(const PointSequence& seq, double a, double b,
                                       std::size_t n, int threads = 1);

/// psi-weighted ordered-pair slab count across two sequences:
/// sum over {(i,j) : a <= v_i . w_j <= b} of psi(v_i) psi(w_j), dot products
/// taken with the cube representatives.  Deterministic for any thread count.
double count_slab_pairs(const PointSequence& v, const PointSequence& w, double a, double b,
                        std::size_t n, int threads = 1);

/// Monte Carlo estimate of the slab main-term integral
/// int int_{a <= x.y <= b} psi(x) psi(y) dx dy with its standard error.
struct MainTermEstimate {
    double value = 0.0;
    double stderr_ = 0.0;
};

MainTermEstimate slab_main_term(double a, double b, int dim, std::size_t samples,
                                std::uint64_t seed);

/// Thin-annulus surrogate for exact-distance queries: annulus count on
/// [t - eta, t + eta].
std::uint64_t exact_distance_count(const PointSequence& seq, double t, std::size_t n,
                                   double eta = 1e-9, int threads = 1);

/// (1/N^2) sum over ordered distinct pairs of dist^{-s}.  Coincident pairs
/// are skipped and counted.
struct EnergyResult {
    double value = 0.0;
    std::uint64_t skipped_pairs = 0;
};

EnergyResult discrete_energy(const PointSequence& seq, double s, std::size_t n,
                             Metric metric = Metric::Torus);

/// Distinct points among the first n after snapping coordinates to quantum.
std::uint64_t support_count(const PointSequence& seq, std::size_t n, double quantum = 1e-9);

/// Distinct quantized torus differences v_i - v_j over all n^2 ordered pairs.
std::uint64_t difference_set_count(const PointSequence& seq, std::size_t n,
                                   double quantum = 1e-9);

/// One incidence measurement against its theorem main term.
struct IncidenceReport {
    RegionSpec region;
    std::size_t n = 0;
    double count = 0.0;       // integer-valued for annulus counts
    double main_term = 0.0;   // N^2 |Omega| or N^2 iint psi psi
    double main_term_stderr = 0.0;  // 0 when analytic
    double remainder = 0.0;   // count - main_term
};

IncidenceReport annulus_report(const PointSequence& seq, double a, double b, std::size_t n,
                               int threads = 1);

IncidenceReport slab_report(const PointSequence& v, const PointSequence& w, double a,
                            double b, std::size_t n, std::size_t oracle_samples,
                            std::uint64_t oracle_seed, int threads = 1);

}  // namespace weylinc
