#include "weylinc/incidence.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <unordered_set>

#include "weylinc/fourier.hpp"
#include "weylinc/numeric.hpp"
#include "weylinc/parallel.hpp"
#include "weylinc/rng.hpp"

namespace weylinc {

namespace {

void validate_annulus(double a, double b) {
    if (!(a > 0.0 && a <= b && b < 0.5))
        throw config_error("annulus count: need 0 < a <= b < 1/2");
}

/// Shared membership predicate of both annulus counters.
inline bool pair_in_annulus(const PointSequence& seq, std::size_t i, std::size_t j, double a,
                            double b) {
    double dist = torus_distance(seq.point(i), seq.point(j));
    return dist >= a && dist <= b;
}

}  // namespace

std::uint64_t count_annulus_pairs(const PointSequence& seq, double a, double b, std::size_t n,
                                  int threads) {
    validate_annulus(a, b);
    seq.require_length(n);

    std::vector<std::uint64_t> partial(block_count(n, 64), 0);
    parallel_blocks(n, 64, threads, [&](std::size_t blk, std::size_t begin, std::size_t end) {
        std::uint64_t local = 0;
        for (std::size_t i = begin; i < end; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (pair_in_annulus(seq, i, j, a, b))
                    ++local;
        partial[blk] = local;
    });

    std::uint64_t unordered = 0;
    for (std::uint64_t c : partial)
        unordered += c;
    return 2 * unordered;  // the metric is symmetric; diagonal excluded since a > 0
}

namespace {

struct CellGrid {
    int cells_per_axis = 0;
    std::vector<std::uint32_t> starts;   // CSR offsets, size cells+1
    std::vector<std::uint32_t> indices;  // point indices grouped by cell
};

CellGrid build_grid(const PointSequence& seq, std::size_t n, int m) {
    const int d = seq.dim();
    std::size_t ncells = 1;
    for (int j = 0; j < d; ++j)
        ncells *= static_cast<std::size_t>(m);

    CellGrid grid;
    grid.cells_per_axis = m;
    std::vector<std::uint32_t> cell_of(n);
    std::vector<std::uint32_t> counts(ncells, 0);
    for (std::size_t i = 0; i < n; ++i) {
        auto p = seq.point(i);
        std::size_t cell = 0;
        for (int j = 0; j < d; ++j) {
            auto c = static_cast<int>(p[static_cast<std::size_t>(j)] * m);
            c = std::clamp(c, 0, m - 1);
            cell = cell * static_cast<std::size_t>(m) + static_cast<std::size_t>(c);
        }
        cell_of[i] = static_cast<std::uint32_t>(cell);
        ++counts[cell];
    }
    grid.starts.assign(ncells + 1, 0);
    for (std::size_t c = 0; c < ncells; ++c)
        grid.starts[c + 1] = grid.starts[c] + counts[c];
    grid.indices.resize(n);
    std::vector<std::uint32_t> cursor(grid.starts.begin(), grid.starts.end() - 1);
    for (std::size_t i = 0; i < n; ++i)
        grid.indices[cursor[cell_of[i]]++] = static_cast<std::uint32_t>(i);
    return grid;
}

/// Cyclic cell offsets whose distance range can intersect [a,b].  Offsets are
/// stored as mixed-radix linear deltas plus per-axis components.
std::vector<std::vector<int>> qualifying_offsets(int d, int m, double a, double b) {
    const double h = 1.0 / m;
    const double margin = 1e-9;  // absorbs rounding between bounds and distances
    std::vector<std::vector<int>> offsets;
    std::vector<int> o(static_cast<std::size_t>(d), 0);
    for (;;) {
        double lo_sq = 0.0, hi_sq = 0.0;
        for (int j = 0; j < d; ++j) {
            int dk = std::min(o[static_cast<std::size_t>(j)],
                              m - o[static_cast<std::size_t>(j)]);
            double gmin = dk > 0 ? (dk - 1) * h : 0.0;
            double gmax = std::min((dk + 1) * h, 0.5);
            lo_sq += gmin * gmin;
            hi_sq += gmax * gmax;
        }
        if (std::sqrt(hi_sq) >= a - margin && std::sqrt(lo_sq) <= b + margin)
            offsets.push_back(o);
        int j = d - 1;
        while (j >= 0 && o[static_cast<std::size_t>(j)] == m - 1) {
            o[static_cast<std::size_t>(j)] = 0;
            --j;
        }
        if (j < 0)
            break;
        ++o[static_cast<std::size_t>(j)];
    }
    return offsets;
}

int grid_cells_per_axis(std::size_t n, int d, double a, double b) {
    double side_target = std::max((b - a) / 4.0, 1.0 / 256.0);
    int by_width = static_cast<int>(1.0 / side_target);
    int by_density = static_cast<int>(std::floor(std::pow(2.0 * static_cast<double>(n),
                                                          1.0 / d)));
    int m = std::min(by_width, by_density);
    // Keep the cell table bounded.
    while (std::pow(static_cast<double>(m), d) > 2e6)
        --m;
    return std::max(m, 1);
}

}  // namespace

std::uint64_t count_annulus_pairs_grid(const PointSequence& seq, double a, double b,
                                       std::size_t n, int threads) {
    validate_annulus(a, b);
    seq.require_length(n);

    const int d = seq.dim();
    const int m = grid_cells_per_axis(n, d, a, b);
    if (m < 4)
        return count_annulus_pairs(seq, a, b, n, threads);

    const CellGrid grid = build_grid(seq, n, m);
    const auto offsets = qualifying_offsets(d, m, a, b);
    const std::size_t ncells = grid.starts.size() - 1;

    // Nonempty cells, with per-axis coordinates for offset application.
    std::vector<std::uint32_t> occupied;
    for (std::size_t c = 0; c < ncells; ++c)
        if (grid.starts[c + 1] > grid.starts[c])
            occupied.push_back(static_cast<std::uint32_t>(c));

    std::vector<std::uint64_t> partial(block_count(occupied.size(), 8), 0);
    parallel_blocks(occupied.size(), 8, threads,
                    [&](std::size_t blk, std::size_t begin, std::size_t end) {
        std::uint64_t local = 0;
        std::vector<int> c1(static_cast<std::size_t>(d)), c2(static_cast<std::size_t>(d));
        for (std::size_t ci = begin; ci < end; ++ci) {
            std::uint32_t cell1 = occupied[ci];
            std::uint32_t rest = cell1;
            for (int j = d - 1; j >= 0; --j) {
                c1[static_cast<std::size_t>(j)] = static_cast<int>(rest % static_cast<std::uint32_t>(m));
                rest /= static_cast<std::uint32_t>(m);
            }
            for (const auto& o : offsets) {
                std::size_t cell2 = 0;
                for (int j = 0; j < d; ++j) {
                    int c = c1[static_cast<std::size_t>(j)] + o[static_cast<std::size_t>(j)];
                    if (c >= m)
                        c -= m;
                    cell2 = cell2 * static_cast<std::size_t>(m) + static_cast<std::size_t>(c);
                }
                const std::uint32_t b1 = grid.starts[cell1], e1 = grid.starts[cell1 + 1];
                const std::uint32_t b2 = grid.starts[cell2], e2 = grid.starts[cell2 + 1];
                if (b2 == e2)
                    continue;
                for (std::uint32_t ii = b1; ii < e1; ++ii)
                    for (std::uint32_t jj = b2; jj < e2; ++jj) {
                        std::uint32_t pi = grid.indices[ii], pj = grid.indices[jj];
                        if (pi == pj)
                            continue;
                        if (pair_in_annulus(seq, pi, pj, a, b))
                            ++local;
                    }
            }
        }
        partial[blk] = local;
    });

    std::uint64_t total = 0;
    for (std::uint64_t c : partial)
        total += c;
    return total;
}

double count_slab_pairs(const PointSequence& v, const PointSequence& w, double a, double b,
                        std::size_t n, int threads) {
    if (v.dim() != w.dim())
        throw config_error("slab count: sequences of different dimension");
    if (!(a >= 0.01 && a <= b))
        throw config_error("slab count: need 1/100 <= a <= b");
    v.require_length(n);
    w.require_length(n);
    const int d = v.dim();

    // psi-weighted rows/columns; zero-weight points cannot contribute.
    std::vector<std::uint32_t> rows, cols;
    std::vector<double> row_psi, col_psi;
    for (std::size_t i = 0; i < n; ++i) {
        double pv = bump_psi(v.point(i));
        if (pv != 0.0) {
            rows.push_back(static_cast<std::uint32_t>(i));
            row_psi.push_back(pv);
        }
        double pw = bump_psi(w.point(i));
        if (pw != 0.0) {
            cols.push_back(static_cast<std::uint32_t>(i));
            col_psi.push_back(pw);
        }
    }

    std::vector<double> partial(block_count(rows.size(), 128), 0.0);
    parallel_blocks(rows.size(), 128, threads,
                    [&](std::size_t blk, std::size_t begin, std::size_t end) {
        KahanSum local;
        for (std::size_t r = begin; r < end; ++r) {
            auto x = v.point(rows[r]);
            double px = row_psi[r];
            for (std::size_t c = 0; c < cols.size(); ++c) {
                auto y = w.point(cols[c]);
                double dot = 0.0;
                for (int j = 0; j < d; ++j)
                    dot += x[static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(j)];
                if (dot >= a && dot <= b)
                    local.add(px * col_psi[c]);
            }
        }
        partial[blk] = local.value();
    });

    KahanSum total;
    for (double p : partial)
        total.add(p);
    return total.value();
}

MainTermEstimate slab_main_term(double a, double b, int dim, std::size_t samples,
                                std::uint64_t seed) {
    if (samples < 10'000)
        throw config_error("slab_main_term: need at least 1e4 samples");
    if (!(a <= b))
        throw config_error("slab_main_term: need a <= b");
    SplitMix64 rng(seed);
    std::vector<double> x(static_cast<std::size_t>(dim)), y(static_cast<std::size_t>(dim));
    KahanSum mean_acc, sq_acc;
    for (std::size_t s = 0; s < samples; ++s) {
        double dot = 0.0;
        for (int j = 0; j < dim; ++j)
            x[static_cast<std::size_t>(j)] = rng.next_double();
        for (int j = 0; j < dim; ++j)
            y[static_cast<std::size_t>(j)] = rng.next_double();
        for (int j = 0; j < dim; ++j)
            dot += x[static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(j)];
        if (dot >= a && dot <= b) {
            double f = bump_psi(x) * bump_psi(y);
            mean_acc.add(f);
            sq_acc.add(f * f);
        }
    }
    double inv = 1.0 / static_cast<double>(samples);
    double mean = mean_acc.value() * inv;
    double mean_sq = sq_acc.value() * inv;
    double variance = std::max(mean_sq - mean * mean, 0.0);
    return {mean, std::sqrt(variance * inv)};
}

std::uint64_t exact_distance_count(const PointSequence& seq, double t, std::size_t n,
                                   double eta, int threads) {
    if (eta < 0.0)
        throw config_error("exact_distance_count: eta must be >= 0");
    if (!(t - eta >= 0.01 && t + eta < 0.5))
        throw config_error("exact_distance_count: need 1/100 <= t-eta and t+eta < 1/2");
    return count_annulus_pairs_grid(seq, t - eta, t + eta, n, threads);
}

EnergyResult discrete_energy(const PointSequence& seq, double s, std::size_t n,
                             Metric metric) {
    if (!(s > 0.0 && s < seq.dim()))
        throw config_error("discrete_energy: need 0 < s < d");
    seq.require_length(n);
    if (n < 2)
        throw config_error("discrete_energy: need at least 2 points");

    std::vector<double> partial_sum(block_count(n, 64), 0.0);
    std::vector<std::uint64_t> partial_skip(block_count(n, 64), 0);
    parallel_blocks(n, 64, 1, [&](std::size_t blk, std::size_t begin, std::size_t end) {
        KahanSum local;
        std::uint64_t skipped = 0;
        for (std::size_t i = begin; i < end; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                double dist = metric == Metric::Torus
                                  ? torus_distance(seq.point(i), seq.point(j))
                                  : euclidean_distance(seq.point(i), seq.point(j));
                if (dist == 0.0) {
                    skipped += 2;
                    continue;
                }
                local.add(2.0 * std::pow(dist, -s));
            }
        partial_sum[blk] = local.value();
        partial_skip[blk] = skipped;
    });

    EnergyResult result;
    KahanSum total;
    for (double p : partial_sum)
        total.add(p);
    for (std::uint64_t c : partial_skip)
        result.skipped_pairs += c;
    if (result.skipped_pairs == static_cast<std::uint64_t>(n) * (n - 1))
        throw numeric_error("discrete_energy: all points identical");
    result.value = total.value() / (static_cast<double>(n) * static_cast<double>(n));
    return result;
}

namespace {

/// Quantized coordinate key; the torus wraps bucket M onto 0.
std::string quantized_key(std::span<const double> values, double quantum) {
    const long long buckets = std::llround(1.0 / quantum);
    std::string key(values.size() * sizeof(long long), '\0');
    for (std::size_t j = 0; j < values.size(); ++j) {
        long long q = std::llround(values[j] / quantum) % buckets;
        if (q < 0)
            q += buckets;
        std::memcpy(key.data() + j * sizeof(long long), &q, sizeof(long long));
    }
    return key;
}

}  // namespace

std::uint64_t support_count(const PointSequence& seq, std::size_t n, double quantum) {
    if (!(quantum > 0.0))
        throw config_error("support_count: quantum must be > 0");
    seq.require_length(n);
    std::unordered_set<std::string> seen;
    seen.reserve(n * 2);
    for (std::size_t i = 0; i < n; ++i)
        seen.insert(quantized_key(seq.point(i), quantum));
    return seen.size();
}

std::uint64_t difference_set_count(const PointSequence& seq, std::size_t n, double quantum) {
    if (!(quantum > 0.0))
        throw config_error("difference_set_count: quantum must be > 0");
    seq.require_length(n);
    const int d = seq.dim();
    std::unordered_set<std::string> seen;
    seen.reserve(n * n / 4);
    std::vector<double> diff(static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < n; ++i) {
        auto x = seq.point(i);
        for (std::size_t j = 0; j < n; ++j) {
            auto y = seq.point(j);
            for (int c = 0; c < d; ++c)
                diff[static_cast<std::size_t>(c)] =
                    reduce_mod1(x[static_cast<std::size_t>(c)] - y[static_cast<std::size_t>(c)]);
            seen.insert(quantized_key(diff, quantum));
        }
    }
    return seen.size();
}

IncidenceReport annulus_report(const PointSequence& seq, double a, double b, std::size_t n,
                               int threads) {
    IncidenceReport report;
    report.region.kind = RegionSpec::Kind::Annulus;
    report.region.a = a;
    report.region.b = b;
    report.n = n;
    report.count = static_cast<double>(count_annulus_pairs_grid(seq, a, b, n, threads));
    report.main_term = static_cast<double>(n) * static_cast<double>(n) *
                       annulus_volume(a, b, seq.dim());
    report.main_term_stderr = 0.0;
    report.remainder = report.count - report.main_term;
    return report;
}

IncidenceReport slab_report(const PointSequence& v, const PointSequence& w, double a,
                            double b, std::size_t n, std::size_t oracle_samples,
                            std::uint64_t oracle_seed, int threads) {
    IncidenceReport report;
    report.region.kind = RegionSpec::Kind::Slab;
    report.region.a = a;
    report.region.b = b;
    report.n = n;
    report.count = count_slab_pairs(v, w, a, b, n, threads);
    MainTermEstimate main = slab_main_term(a, b, v.dim(), oracle_samples, oracle_seed);
    double nn = static_cast<double>(n) * static_cast<double>(n);
    report.main_term = nn * main.value;
    report.main_term_stderr = nn * main.stderr_;
    report.remainder = report.count - report.main_term;
    return report;
}

}  // namespace weylinc
