#include "weylinc/harness.hpp"

#include <algorithm>
#include <cmath>

#include "weylinc/fourier.hpp"
#include "weylinc/numeric.hpp"
#include "weylinc/rng.hpp"
#include "weylinc/weyl.hpp"

namespace weylinc {

std::string verdict_name(Verdict v) {
    return v == Verdict::WithinBound ? "WithinBound" : "Exceeds";
}

void ExperimentConfig::validate() const {
    generator.validate();
    if (checkpoints.empty())
        throw config_error("experiment: no checkpoints");
    if (!std::is_sorted(checkpoints.begin(), checkpoints.end()) ||
        std::adjacent_find(checkpoints.begin(), checkpoints.end()) != checkpoints.end())
        throw config_error("experiment: checkpoints must be strictly increasing");
    if (seeds.empty())
        throw config_error("experiment: no seeds");
    region.validate();
}

double default_gamma_for(const ExperimentConfig& config) {
    // Ties the two halves together: the exponent assumed by the incidence
    // theorems defaults to the measured Weyl exponent of the same generator.
    GeneratorConfig gen = config.generator;
    gen.seed = config.seeds.front();
    const std::size_t max_n = config.checkpoints.back();
    PointSequence seq = generate(gen, max_n);
    double eps = config.epsilon > 0.0 ? config.epsilon : 0.1;
    FrequencySpec freq(gen.dim, default_kmax(gen.dim));
    WeylProfile profile =
        weyl_profile(seq, freq, config.checkpoints, eps, config.threads);
    return estimate_gamma(profile).gamma_hat;
}

namespace {

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    std::size_t n = values.size();
    if (n % 2 == 1)
        return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

ScalingFit fit_against_bound(const std::vector<std::size_t>& checkpoints,
                             const std::vector<double>& stats, double predicted_slope,
                             double tolerance, bool bound_from_above, double gamma_used) {
    ScalingFit fit;
    fit.predicted_slope = predicted_slope;
    fit.tolerance = tolerance;
    fit.gamma_used = gamma_used;

    std::vector<double> log_n, log_v;
    for (std::size_t c = 0; c < checkpoints.size(); ++c) {
        if (stats[c] == 0.0) {
            ++fit.dropped_checkpoints;  // log undefined; dropped with a warning
            continue;
        }
        fit.checkpoints.push_back(checkpoints[c]);
        fit.values.push_back(stats[c]);
        log_n.push_back(std::log(static_cast<double>(checkpoints[c])));
        log_v.push_back(std::log(stats[c]));
    }
    if (log_n.size() < 3)
        throw numeric_error("scaling fit: fewer than 3 nonzero checkpoints");

    LinearFit line = linear_fit(log_n, log_v);
    fit.slope = line.slope;
    fit.intercept = line.intercept;
    fit.r_squared = line.r_squared;
    fit.slope_stderr = line.slope_stderr;
    bool ok = bound_from_above ? fit.slope <= predicted_slope + tolerance
                               : fit.slope >= predicted_slope - tolerance;
    fit.verdict = ok ? Verdict::WithinBound : Verdict::Exceeds;
    return fit;
}

}  // namespace

SweepResult scaling_sweep(const ExperimentConfig& config) {
    config.validate();
    const bool annulus = config.region.kind == RegionSpec::Kind::Annulus;
    config.region.validate(annulus);

    double gamma = config.gamma_assumed;
    if (std::isnan(gamma))
        gamma = default_gamma_for(config);

    const std::size_t max_n = config.checkpoints.back();

    // The slab main term is one fixed seeded Monte Carlo value per sweep.
    MainTermEstimate slab_main{};
    if (!annulus)
        slab_main = slab_main_term(config.region.a, config.region.b, config.generator.dim,
                                   config.oracle_samples, config.oracle_seed);

    SweepResult result;
    std::vector<std::vector<double>> abs_remainders(config.checkpoints.size());

    for (std::uint64_t seed : config.seeds) {
        GeneratorConfig gen = config.generator;
        gen.seed = seed;
        PointSequence seq = generate(gen, max_n);

        PointSequence partner;
        if (!annulus) {
            GeneratorConfig gen2 = config.generator;
            gen2.seed = SplitMix64::derive(seed, 0x51ABu);
            partner = generate(gen2, max_n);
        }

        for (std::size_t c = 0; c < config.checkpoints.size(); ++c) {
            const std::size_t n = config.checkpoints[c];
            SweepRow row;
            row.seed = seed;
            row.n = n;
            if (annulus) {
                row.count = static_cast<double>(count_annulus_pairs_grid(
                    seq, config.region.a, config.region.b, n, config.threads));
                row.main_term = static_cast<double>(n) * static_cast<double>(n) *
                                annulus_volume(config.region.a, config.region.b, gen.dim);
            } else {
                row.count = count_slab_pairs(seq, partner, config.region.a, config.region.b,
                                             n, config.threads);
                row.main_term =
                    static_cast<double>(n) * static_cast<double>(n) * slab_main.value;
            }
            row.remainder = row.count - row.main_term;
            abs_remainders[c].push_back(std::fabs(row.remainder));
            result.rows.push_back(row);
        }
    }

    std::vector<double> stats;
    for (auto& values : abs_remainders)
        stats.push_back(median(std::move(values)));

    double predicted = annulus
                           ? theorem1_remainder_bound(gamma, config.generator.dim, max_n,
                                                      config.epsilon).count_exponent
                           : theorem2_remainder_bound(gamma, max_n, config.epsilon)
                                 .count_exponent;
    result.fit = fit_against_bound(config.checkpoints, stats, predicted, config.tolerance,
                                   /*bound_from_above=*/true, gamma);
    return result;
}

SweepResult support_sweep(const ExperimentConfig& config, GrowthStat stat) {
    config.generator.validate();
    if (config.checkpoints.empty())
        throw config_error("experiment: no checkpoints");
    if (config.seeds.empty())
        throw config_error("experiment: no seeds");

    double gamma = config.gamma_assumed;
    if (std::isnan(gamma))
        gamma = default_gamma_for(config);

    const std::size_t max_n = config.checkpoints.back();

    SweepResult result;
    std::vector<std::vector<double>> counts(config.checkpoints.size());
    for (std::uint64_t seed : config.seeds) {
        GeneratorConfig gen = config.generator;
        gen.seed = seed;
        PointSequence seq = generate(gen, max_n);
        for (std::size_t c = 0; c < config.checkpoints.size(); ++c) {
            const std::size_t n = config.checkpoints[c];
            std::uint64_t value = stat == GrowthStat::Support
                                      ? support_count(seq, n)
                                      : difference_set_count(seq, n);
            SweepRow row;
            row.seed = seed;
            row.n = n;
            row.count = static_cast<double>(value);
            row.main_term = 0.0;
            row.remainder = row.count;
            counts[c].push_back(row.count);
            result.rows.push_back(row);
        }
    }

    std::vector<double> stats;
    for (auto& values : counts)
        stats.push_back(median(std::move(values)));

    // Support grows at least like N^{2 gamma - eps}; the difference set is
    // the support of the self-convolved measure with N_m = N^2.
    double predicted = stat == GrowthStat::Support ? 2.0 * gamma - config.epsilon
                                                   : 2.0 * (2.0 * gamma) - config.epsilon;
    result.fit = fit_against_bound(config.checkpoints, stats, predicted, config.tolerance,
                                   /*bound_from_above=*/false, gamma);
    return result;
}

}  // namespace weylinc
