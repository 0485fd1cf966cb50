#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "weylinc/core.hpp"
#include "weylinc/generators.hpp"
#include "weylinc/incidence.hpp"

namespace weylinc {

enum class Verdict { WithinBound, Exceeds };

std::string verdict_name(Verdict v);

/// One experiment: a generator family, a region, checkpoints and seeds.
struct ExperimentConfig {
    GeneratorConfig generator;
    RegionSpec region;
    std::vector<std::size_t> checkpoints;
    std::vector<std::uint64_t> seeds;
    // NaN selects the weyl module's own estimate for the generator.
    double gamma_assumed = std::numeric_limits<double>::quiet_NaN();
    double epsilon = 0.0;
    double tolerance = 0.15;  // slope slack, log-log units
    std::size_t oracle_samples = 10'000'000;  // slab main-term Monte Carlo
    std::uint64_t oracle_seed = 0x5EEDF00Dull;
    int threads = 1;

    void validate() const;
};

/// Fit of a scaling statistic against a theorem exponent.
struct ScalingFit {
    std::vector<std::size_t> checkpoints;  // surviving checkpoints
    std::vector<double> values;            // statistic per checkpoint
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double slope_stderr = 0.0;
    double predicted_slope = 0.0;
    double tolerance = 0.0;
    Verdict verdict = Verdict::Exceeds;
    std::size_t dropped_checkpoints = 0;  // zero-statistic checkpoints
    double gamma_used = 0.0;
};

struct SweepRow {
    std::uint64_t seed = 0;
    std::size_t n = 0;
    double count = 0.0;
    double main_term = 0.0;
    double remainder = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;  // sorted by (seed, n)
    ScalingFit fit;
};

/// Remainder-exponent sweep.  Per seed and checkpoint, measures the incidence
/// count for config.region, takes the median of |R| across seeds at each
/// checkpoint, fits log|R| against log N, and compares the slope with the
/// theorem exponent for gamma_assumed: 2 - 4g/(d+1) + eps for annuli,
/// 2 - g + eps for slabs.  WithinBound iff slope <= predicted + tolerance.
SweepResult scaling_sweep(const ExperimentConfig& config);

enum class GrowthStat { Support, DiffSet };

/// Growth-from-below sweep of support or difference-set size.  The verdict
/// compares the fitted slope against the lower-bound exponent (2g - eps for
/// support, 2(2g) - eps for the difference set): WithinBound iff
/// slope >= predicted - tolerance.
SweepResult support_sweep(const ExperimentConfig& config, GrowthStat stat);

/// gamma_hat for the configured generator measured on its first seed, used
/// when gamma_assumed is NaN.
double default_gamma_for(const ExperimentConfig& config);

/// CLI entry point.  Returns 0 on success, 2 on configuration errors,
/// 3 on runtime or numeric errors.
int run_cli(int argc, char** argv);

}  // namespace weylinc
