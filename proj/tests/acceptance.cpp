// Acceptance suite: runs the toolkit's end-to-end checks at their stated
// tolerances and prints one PASS/FAIL line per criterion.
//
// Usage: acceptance [--cli <path-to-weylinc-binary>]
// The CLI determinism criterion fails without --cli.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "weylinc/core.hpp"
#include "weylinc/fourier.hpp"
#include "weylinc/generators.hpp"
#include "weylinc/harness.hpp"
#include "weylinc/incidence.hpp"
#include "weylinc/rng.hpp"
#include "weylinc/weyl.hpp"

using namespace weylinc;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s  criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion,
                name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass)
        ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

PointSequence iid(std::uint64_t seed, int dim, std::size_t n) {
    GeneratorConfig config;
    config.family = Family::IidUniform;
    config.dim = dim;
    config.seed = seed;
    return generate(config, n);
}

// ---- criterion 1: grid counter == brute force ------------------------------

void criterion_oracle_equivalence() {
    auto start = std::chrono::steady_clock::now();
    SplitMix64 rng(20240);
    std::size_t mismatches = 0, checked = 0;
    for (int d : {2, 3, 4}) {
        for (int trial = 0; trial < 100; ++trial) {
            std::size_t n = 100 + rng.next_u64() % 1901;  // up to 2000
            double a = 0.01 + 0.44 * rng.next_double();
            double b = a + (0.4999 - a) * rng.next_double();
            GeneratorConfig config;
            config.dim = d;
            config.seed = rng.next_u64();
            if (trial % 10 < 7) {
                config.family = Family::IidUniform;
            } else {
                config.family = Family::ClusteredAdversarial;
                config.clusters = 1 + static_cast<int>(rng.next_u64() % 6);
                config.cluster_radius = 0.001 + 0.1 * rng.next_double();
            }
            PointSequence seq = generate(config, n);
            if (count_annulus_pairs(seq, a, b, n, 2) !=
                count_annulus_pairs_grid(seq, a, b, n, 2))
                ++mismatches;
            ++checked;
        }
    }
    double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << checked << " configurations, " << mismatches << " mismatches, " << elapsed
           << " s";
    report(1, "grid counter equals brute force", mismatches == 0 && elapsed < 120.0,
           detail.str());
}

// ---- criterion 2: Lenz reproduction ----------------------------------------

void criterion_lenz() {
    bool pass = true;
    std::ostringstream detail;
    for (int m : {5, 6, 7}) {
        GeneratorConfig config;
        config.family = Family::Lenz;
        config.dim = 4;
        config.points_per_circle = m;
        config.scale = 0.25;
        std::size_t n = 2 * static_cast<std::size_t>(m);
        PointSequence seq = generate(config, n);
        std::uint64_t count = exact_distance_count(seq, lenz_cross_distance(0.25), n);
        std::uint64_t expected = n * n / 2;
        detail << "n=" << n << ":" << count << "/" << expected << " ";
        if (count != expected)
            pass = false;
    }
    report(2, "Lenz two-circle counts n^2/2", pass, detail.str());
}

// ---- criterion 3: gamma estimation -----------------------------------------

void criterion_gamma() {
    auto start = std::chrono::steady_clock::now();
    int in_band = 0;
    double lo = 1.0, hi = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        PointSequence seq = iid(seed, 2, 1 << 14);
        FrequencySpec freq(2, 20);
        WeylProfile profile = weyl_profile(
            seq, freq, {256, 512, 1024, 2048, 4096, 8192, 16384}, 0.1, 2);
        double gamma = estimate_gamma(profile).gamma_hat;
        lo = std::min(lo, gamma);
        hi = std::max(hi, gamma);
        if (gamma >= 0.40 && gamma <= 0.55)
            ++in_band;
    }
    double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << in_band << "/10 in [0.40,0.55], range [" << lo << "," << hi << "], "
           << elapsed << " s";
    report(3, "iid gamma_hat near 1/2", in_band >= 8 && elapsed < 60.0, detail.str());
}

// ---- criterion 4: annulus main term ----------------------------------------

void criterion_main_term() {
    const double target = std::numbers::pi * 0.0275;
    int ok = 0;
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        PointSequence seq = iid(seed, 2, 4096);
        double density = static_cast<double>(
                             count_annulus_pairs_grid(seq, 0.25, 0.30, 4096, 2)) /
                         (4096.0 * 4096.0);
        double dev = std::fabs(density - target);
        worst = std::max(worst, dev);
        if (dev <= 0.005)
            ++ok;
    }
    std::ostringstream detail;
    detail << ok << "/10 within 0.005, worst deviation " << worst;
    report(4, "annulus density matches N^2 |Omega|", ok >= 9, detail.str());
}

// ---- criteria 5 and 6: remainder exponents ---------------------------------

ExperimentConfig sweep_config(int dim, const std::string& region) {
    ExperimentConfig config;
    config.generator.family = Family::IidUniform;
    config.generator.dim = dim;
    config.region = RegionSpec::parse(region);
    config.checkpoints = {512, 1024, 2048, 4096, 8192};
    for (std::uint64_t s = 101; s <= 110; ++s)
        config.seeds.push_back(s);
    config.gamma_assumed = 0.5;
    config.epsilon = 0.0;
    config.tolerance = 0.15;
    config.threads = 2;
    return config;
}

void criterion_theorem1_exponent() {
    auto start = std::chrono::steady_clock::now();
    SweepResult d2 = scaling_sweep(sweep_config(2, "annulus:0.25:0.30"));
    SweepResult d3 = scaling_sweep(sweep_config(3, "annulus:0.25:0.30"));
    double elapsed = seconds_since(start);
    bool pass = d2.fit.verdict == Verdict::WithinBound &&
                d3.fit.verdict == Verdict::WithinBound && elapsed < 300.0;
    std::ostringstream detail;
    detail << "d=2 slope " << d2.fit.slope << " <= " << d2.fit.predicted_slope << "+0.15, "
           << "d=3 slope " << d3.fit.slope << " <= " << d3.fit.predicted_slope << "+0.15, "
           << elapsed << " s";
    report(5, "annulus remainder exponent", pass, detail.str());
}

void criterion_theorem2_exponent() {
    auto start = std::chrono::steady_clock::now();
    SweepResult result = scaling_sweep(sweep_config(2, "slab:0.5:0.7"));
    double elapsed = seconds_since(start);
    bool pass = result.fit.verdict == Verdict::WithinBound && elapsed < 300.0;
    std::ostringstream detail;
    detail << "slope " << result.fit.slope << " <= " << result.fit.predicted_slope
           << "+0.15, " << elapsed << " s";
    report(6, "slab remainder exponent", pass, detail.str());
}

// ---- criterion 7: decay lemma ----------------------------------------------

void criterion_decay() {
    auto a2 = fit_transform_decay(TransformKind::AnnulusIndicator, 0.25, 0.30, 2, 4, 128);
    auto a3 = fit_transform_decay(TransformKind::AnnulusIndicator, 0.25, 0.45, 3, 4, 128);
    auto s2 = fit_transform_decay(TransformKind::SphereMeasure, 0.25, 0.0, 2, 4, 128);
    auto s3 = fit_transform_decay(TransformKind::SphereMeasure, 0.25, 0.0, 3, 4, 128);
    bool slopes = a2.slope <= -1.5 + 0.1 && a3.slope <= -2.0 + 0.1 &&
                  s2.slope <= -0.5 + 0.1 && s3.slope <= -1.0 + 0.1;

    std::vector<int> k34{3, 4}, k50{5, 0}, k3a{1, 2, 2}, k3b{3, 0, 0};
    bool radial =
        std::fabs(annulus_fourier(0.25, 0.30, 2, k34) -
                  annulus_fourier(0.25, 0.30, 2, k50)) <= 1e-10 &&
        std::fabs(sphere_measure_fourier(0.25, 2, k34) -
                  sphere_measure_fourier(0.25, 2, k50)) <= 1e-10 &&
        std::fabs(annulus_fourier(0.25, 0.45, 3, k3a) -
                  annulus_fourier(0.25, 0.45, 3, k3b)) <= 1e-10 &&
        std::fabs(sphere_measure_fourier(0.25, 3, k3a) -
                  sphere_measure_fourier(0.25, 3, k3b)) <= 1e-10;

    std::ostringstream detail;
    detail << "annulus slopes " << a2.slope << "," << a3.slope << "; sphere slopes "
           << s2.slope << "," << s3.slope << "; radiality " << (radial ? "ok" : "violated");
    report(7, "stationary-phase decay exponents", slopes && radial, detail.str());
}

// ---- criterion 8: Poisson summation ----------------------------------------

void criterion_poisson() {
    auto start = std::chrono::steady_clock::now();
    SplitMix64 rng(808);
    double worst = 0.0;
    for (int d : {1, 2}) {
        for (double delta : {0.05, 0.1}) {
            Mollifier m(delta, d);
            int truncation = static_cast<int>(std::ceil(70.0 / delta));
            m.precompute_series(truncation);
            for (int trial = 0; trial < 100; ++trial) {
                std::vector<double> x(static_cast<std::size_t>(d));
                for (auto& c : x)
                    c = rng.next_double();
                double spatial = m.value_spatial(x);
                double series = m.value_fourier(x, truncation);
                worst = std::max(worst, std::fabs(spatial - series));
            }
        }
    }
    double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << "worst |spatial - series| = " << worst << " over 100 points x 4 cases, "
           << elapsed << " s";
    report(8, "mollifier Poisson summation to 1e-8", worst <= 1e-8, detail.str());
}

// ---- criterion 9: difference-set counts ------------------------------------

void criterion_difference_set() {
    PointSequence random_points = iid(1, 2, 512);
    std::uint64_t got_iid = difference_set_count(random_points, 512, 1e-9);
    std::uint64_t want_iid = 512ull * 512 - 512 + 1;

    GeneratorConfig kron;
    kron.family = Family::Kronecker;
    kron.dim = 1;
    PointSequence progression = generate(kron, 512);
    std::uint64_t got_kron = difference_set_count(progression, 512, 1e-9);

    std::ostringstream detail;
    detail << "iid " << got_iid << "/" << want_iid << ", progression " << got_kron
           << "/1023";
    report(9, "difference-set sizes are exact", got_iid == want_iid && got_kron == 1023,
           detail.str());
}

// ---- criterion 10: Dirichlet adversarial frequency -------------------------

void criterion_adversarial() {
    auto start = std::chrono::steady_clock::now();
    const double eps = 0.05;
    const double guarantee = 1.0 - 2.0 * std::numbers::pi * eps;
    int ok = 0;
    double worst = 1.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        SplitMix64 rng(seed);
        std::vector<double> points;
        for (int i = 0; i < 5; ++i)
            points.push_back(rng.next_double());
        AdversarialResult r = adversarial_frequency(points, eps, 3'200'000);
        worst = std::min(worst, r.magnitude);
        if (r.magnitude >= guarantee)
            ++ok;
    }
    double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << ok << "/10 reach " << guarantee << ", worst " << worst << ", " << elapsed
           << " s";
    report(10, "Dirichlet adversarial frequency", ok >= 9 && elapsed < 120.0, detail.str());
}

// ---- criterion 11: Hoeffding bound -----------------------------------------

void criterion_hoeffding() {
    const std::size_t n = 1 << 10;
    std::vector<int> k{1, 0};
    const double gamma = 0.4, eps = 0.1;
    double threshold = std::pow(static_cast<double>(n), -gamma);  // |k| = 1
    int violations = 0;
    const int seeds = 200;
    for (std::uint64_t seed = 1; seed <= seeds; ++seed) {
        PointSequence seq = iid(seed, 2, n);
        if (std::abs(exp_sum(seq, k, n)) / static_cast<double>(n) >= threshold)
            ++violations;
    }
    double rate = static_cast<double>(violations) / seeds;
    double bound = hoeffding_bound(k, n, gamma, eps);
    std::ostringstream detail;
    detail << "violation rate " << rate << " vs bound " << bound << " + 0.05";
    report(11, "empirical Hoeffding bound", rate <= bound + 0.05, detail.str());
}

// ---- criterion 12: CLI determinism -----------------------------------------

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool run_command(const std::string& command) { return std::system(command.c_str()) == 0; }

void criterion_cli_determinism(const std::string& cli) {
    if (cli.empty()) {
        report(12, "CLI byte-determinism", false, "no --cli path given");
        return;
    }
    const std::string dir = "acceptance_cli_tmp";
    run_command("rm -rf " + dir + " && mkdir -p " + dir);

    struct Job {
        std::string name;
        std::string args;  // {T} and {R} substituted per run
        bool threaded;
    };
    std::vector<Job> jobs = {
        {"gen", "gen --family iid --dim 2 --n 2048 --seed 7", false},
        {"gen2", "gen --family halton --dim 3 --n 512 --seed 9", false},
        {"gamma",
         "gamma --in " + dir + "/gen.out --kmax 12 --eps 0.1 "
         "--checkpoints 256,512,1024,2048 --threads {T}",
         true},
        {"incidence",
         "incidence --in " + dir + "/gen.out --region annulus:0.25:0.30 --threads {T}",
         true},
        {"scaling",
         "scaling --family iid --dim 2 --region annulus:0.25:0.30 "
         "--checkpoints 256,512,1024 --seeds 3 --gamma 0.5 --threads {T} --out " +
             dir + "/sweep_{T}_{R}.csv",
         true},
    };

    bool pass = true;
    std::ostringstream detail;
    for (const auto& job : jobs) {
        std::vector<std::string> outputs;
        std::vector<int> thread_counts =
            job.threaded ? std::vector<int>{1, 4, 8} : std::vector<int>{1, 1};
        for (std::size_t run = 0; run < thread_counts.size() * 2; ++run) {
            int threads = thread_counts[run % thread_counts.size()];
            std::string args = job.args;
            for (std::string::size_type pos; (pos = args.find("{T}")) != std::string::npos;)
                args.replace(pos, 3, std::to_string(threads));
            for (std::string::size_type pos; (pos = args.find("{R}")) != std::string::npos;)
                args.replace(pos, 3, std::to_string(run));
            std::string stdout_path = dir + "/" + job.name + "_run" + std::to_string(run);
            if (!run_command(cli + " " + args + " > " + stdout_path)) {
                pass = false;
                detail << job.name << ": exit != 0; ";
                break;
            }
            std::string blob = slurp(stdout_path);
            // sweeps also write CSV files; fold them into the comparison
            if (job.name == "scaling")
                blob += slurp(dir + "/sweep_" + std::to_string(threads) + "_" +
                              std::to_string(run) + ".csv");
            if (job.name == "gen" && run == 0)
                run_command("cp " + stdout_path + " " + dir + "/gen.out");
            outputs.push_back(blob);
        }
        for (std::size_t i = 1; i < outputs.size(); ++i)
            if (outputs[i] != outputs[0]) {
                pass = false;
                detail << job.name << ": run " << i << " differs; ";
            }
    }
    if (pass)
        detail << "gen/gamma/incidence/scaling byte-identical across reruns and threads "
                  "{1,4,8}";
    report(12, "CLI byte-determinism", pass, detail.str());
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli")
            cli = argv[i + 1];

    criterion_oracle_equivalence();
    criterion_lenz();
    criterion_gamma();
    criterion_main_term();
    criterion_theorem1_exponent();
    criterion_theorem2_exponent();
    criterion_decay();
    criterion_poisson();
    criterion_difference_set();
    criterion_adversarial();
    criterion_hoeffding();
    criterion_cli_determinism(cli);

    if (failures == 0)
        std::printf("acceptance: all 12 criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
