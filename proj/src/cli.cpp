#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "weylinc/fourier.hpp"
#include "weylinc/harness.hpp"
#include "weylinc/io.hpp"
#include "weylinc/weyl.hpp"

namespace weylinc {

namespace {

std::vector<std::size_t> parse_size_list(const std::string& text) {
    std::vector<std::size_t> values;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        values.push_back(std::stoull(item));
    if (values.empty())
        throw config_error("expected a comma-separated list, got '" + text + "'");
    return values;
}

/// "--seeds 10" means seeds 1..10; "--seeds 3,7,9" is an explicit list.
std::vector<std::uint64_t> parse_seeds(const std::string& text) {
    std::vector<std::uint64_t> seeds;
    if (text.find(',') == std::string::npos) {
        std::uint64_t count = std::stoull(text);
        if (count == 0)
            throw config_error("--seeds: need at least one seed");
        for (std::uint64_t s = 1; s <= count; ++s)
            seeds.push_back(s);
        return seeds;
    }
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        seeds.push_back(std::stoull(item));
    return seeds;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> values;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        values.push_back(std::stod(item));
    return values;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        values.push_back(std::stoi(item));
    return values;
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw config_error("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string gamma_fit_json(const GammaFit& fit) {
    JsonWriter w;
    w.begin();
    w.key("gamma_hat").value(fit.gamma_hat);
    w.key("stderr").value(fit.stderr_);
    w.key("r_squared").value(fit.r_squared);
    w.key("epsilon").value(fit.epsilon);
    w.key("kmax").value(static_cast<std::int64_t>(fit.kmax));
    w.key("checkpoints").begin_array();
    for (std::size_t n : fit.checkpoints)
        w.value(static_cast<std::uint64_t>(n));
    w.end_array();
    w.end();
    return w.str();
}

std::string report_json(const IncidenceReport& report) {
    JsonWriter w;
    w.begin();
    w.key("region").begin_object();
    w.key("kind").value(report.region.kind_name());
    w.key("a").value(report.region.a);
    w.key("b").value(report.region.b);
    w.end();
    w.key("N").value(static_cast<std::uint64_t>(report.n));
    w.key("count").value(report.count);
    w.key("main_term").value(report.main_term);
    w.key("main_term_stderr").value(report.main_term_stderr);
    w.key("remainder").value(report.remainder);
    w.end();
    return w.str();
}

void report_csv(std::ostream& out, const IncidenceReport& report) {
    out << "N,count,main_term,remainder,abs_remainder\n";
    out << report.n << ',' << format_double(report.count) << ','
        << format_double(report.main_term) << ',' << format_double(report.remainder) << ','
        << format_double(std::fabs(report.remainder)) << '\n';
}

std::string scaling_fit_json(const ScalingFit& fit) {
    JsonWriter w;
    w.begin();
    w.key("slope").value(fit.slope);
    w.key("intercept").value(fit.intercept);
    w.key("r_squared").value(fit.r_squared);
    w.key("slope_stderr").value(fit.slope_stderr);
    w.key("predicted_slope").value(fit.predicted_slope);
    w.key("tolerance").value(fit.tolerance);
    w.key("gamma").value(fit.gamma_used);
    w.key("verdict").value(verdict_name(fit.verdict));
    w.key("dropped_checkpoints").value(static_cast<std::uint64_t>(fit.dropped_checkpoints));
    w.key("checkpoints").begin_array();
    for (std::size_t n : fit.checkpoints)
        w.value(static_cast<std::uint64_t>(n));
    w.end_array();
    w.key("median_values").begin_array();
    for (double v : fit.values)
        w.value(v);
    w.end_array();
    w.end();
    return w.str();
}

void sweep_csv(std::ostream& out, const SweepResult& result, bool with_main_term) {
    if (with_main_term)
        out << "seed,N,count,main_term,remainder,abs_remainder\n";
    else
        out << "seed,N,count\n";
    for (const auto& row : result.rows) {
        out << row.seed << ',' << row.n << ',' << format_double(row.count);
        if (with_main_term)
            out << ',' << format_double(row.main_term) << ',' << format_double(row.remainder)
                << ',' << format_double(std::fabs(row.remainder));
        out << '\n';
    }
}

struct GeneratorFlags {
    std::string family = "iid";
    int dim = 2;
    std::uint64_t seed = 1;
    std::string alpha;
    std::string bases;
    int side = 4;
    int lenz_m = 5;
    double lenz_scale = 0.25;
    int clusters = 4;
    double cluster_radius = 1e-3;
};

void add_generator_flags(CLI::App* cmd, GeneratorFlags& flags) {
    cmd->add_option("--family", flags.family,
                    "iid | kronecker | halton | lattice | lenz | clustered");
    cmd->add_option("--dim", flags.dim, "point dimension");
    cmd->add_option("--seed", flags.seed, "generator seed");
    cmd->add_option("--alpha", flags.alpha, "kronecker direction, comma separated");
    cmd->add_option("--bases", flags.bases, "halton bases, comma separated");
    cmd->add_option("--side", flags.side, "lattice side length");
    cmd->add_option("--lenz-m", flags.lenz_m, "lenz points per circle");
    cmd->add_option("--lenz-scale", flags.lenz_scale, "lenz circle radius");
    cmd->add_option("--clusters", flags.clusters, "cluster count");
    cmd->add_option("--cluster-radius", flags.cluster_radius, "cluster radius");
}

GeneratorConfig generator_from_flags(const GeneratorFlags& flags) {
    GeneratorConfig config;
    config.family = family_from_string(flags.family);
    config.dim = flags.dim;
    config.seed = flags.seed;
    if (!flags.alpha.empty())
        config.alpha = parse_double_list(flags.alpha);
    if (!flags.bases.empty())
        config.bases = parse_int_list(flags.bases);
    config.side = flags.side;
    config.points_per_circle = flags.lenz_m;
    config.scale = flags.lenz_scale;
    config.clusters = flags.clusters;
    config.cluster_radius = flags.cluster_radius;
    return config;
}

GeneratorConfig generator_from_json(const nlohmann::json& j) {
    GeneratorFlags flags;
    if (j.contains("family"))
        flags.family = j["family"].get<std::string>();
    if (j.contains("dim"))
        flags.dim = j["dim"].get<int>();
    if (j.contains("seed"))
        flags.seed = j["seed"].get<std::uint64_t>();
    GeneratorConfig config = generator_from_flags(flags);
    if (j.contains("alpha"))
        config.alpha = j["alpha"].get<std::vector<double>>();
    if (j.contains("bases"))
        config.bases = j["bases"].get<std::vector<int>>();
    if (j.contains("side"))
        config.side = j["side"].get<int>();
    if (j.contains("lenz_m"))
        config.points_per_circle = j["lenz_m"].get<int>();
    if (j.contains("lenz_scale"))
        config.scale = j["lenz_scale"].get<double>();
    if (j.contains("clusters"))
        config.clusters = j["clusters"].get<int>();
    if (j.contains("cluster_radius"))
        config.cluster_radius = j["cluster_radius"].get<double>();
    return config;
}

/// Sweep-style commands share an ExperimentConfig assembled from an optional
/// JSON config file with CLI flags taking precedence.
struct SweepFlags {
    GeneratorFlags generator;
    std::string config_path;
    std::string region = "annulus:0.25:0.30";
    std::string checkpoints = "512,1024,2048,4096";
    std::string seeds = "10";
    double gamma = std::numeric_limits<double>::quiet_NaN();
    double epsilon = 0.0;
    double tolerance = 0.15;
    std::size_t oracle_samples = 10'000'000;
    std::uint64_t oracle_seed = 0x5EEDF00Dull;
    int threads = 1;
    std::string out;
};

void add_sweep_flags(CLI::App* cmd, SweepFlags& flags) {
    cmd->add_option("--config", flags.config_path, "JSON config file; flags override");
    add_generator_flags(cmd, flags.generator);
    cmd->add_option("--region", flags.region, "annulus:<a>:<b> or slab:<a>:<b>");
    cmd->add_option("--checkpoints", flags.checkpoints, "comma-separated N values");
    cmd->add_option("--seeds", flags.seeds, "seed count or comma-separated list");
    cmd->add_option("--gamma", flags.gamma, "assumed gamma (default: measured gamma_hat)");
    cmd->add_option("--eps", flags.epsilon, "epsilon slack in the theorem exponent");
    cmd->add_option("--tolerance", flags.tolerance, "slope tolerance");
    cmd->add_option("--oracle-samples", flags.oracle_samples, "slab main-term MC samples");
    cmd->add_option("--oracle-seed", flags.oracle_seed, "slab main-term MC seed");
    cmd->add_option("--threads", flags.threads, "worker threads");
    cmd->add_option("--out", flags.out, "CSV output path (default: stdout)");
}

ExperimentConfig experiment_from_flags(const CLI::App* cmd, const SweepFlags& flags) {
    ExperimentConfig config;
    bool from_file = false;
    nlohmann::json j;
    if (!flags.config_path.empty()) {
        std::ifstream in(flags.config_path);
        if (!in)
            throw config_error("cannot open config file '" + flags.config_path + "'");
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw config_error(std::string("config file: ") + e.what());
        }
        from_file = true;
    }

    if (from_file && j.contains("generator"))
        config.generator = generator_from_json(j["generator"]);
    if (from_file && j.contains("region")) {
        if (j["region"].is_string())
            config.region = RegionSpec::parse(j["region"].get<std::string>());
        else {
            config.region.kind = j["region"].value("kind", "annulus") == std::string("slab")
                                     ? RegionSpec::Kind::Slab
                                     : RegionSpec::Kind::Annulus;
            config.region.a = j["region"]["a"].get<double>();
            config.region.b = j["region"]["b"].get<double>();
        }
    } else {
        config.region = RegionSpec::parse(flags.region);
    }
    if (from_file && j.contains("checkpoints"))
        config.checkpoints = j["checkpoints"].get<std::vector<std::size_t>>();
    else
        config.checkpoints = parse_size_list(flags.checkpoints);
    if (from_file && j.contains("seeds")) {
        if (j["seeds"].is_number())
            config.seeds = parse_seeds(std::to_string(j["seeds"].get<std::uint64_t>()));
        else
            config.seeds = j["seeds"].get<std::vector<std::uint64_t>>();
    } else {
        config.seeds = parse_seeds(flags.seeds);
    }
    if (from_file) {
        config.gamma_assumed = j.value("gamma", config.gamma_assumed);
        config.epsilon = j.value("epsilon", config.epsilon);
        config.tolerance = j.value("tolerance", config.tolerance);
        config.oracle_samples = j.value("oracle_samples", config.oracle_samples);
        config.oracle_seed = j.value("oracle_seed", config.oracle_seed);
        config.threads = j.value("threads", config.threads);
    }

    // CLI flags override file values.
    auto given = [&](const std::string& name) { return cmd->count(name) > 0; };
    if (!from_file || given("--family") || given("--dim") || given("--seed") ||
        given("--alpha") || given("--bases") || given("--side") || given("--lenz-m") ||
        given("--lenz-scale") || given("--clusters") || given("--cluster-radius")) {
        GeneratorConfig from_cli = generator_from_flags(flags.generator);
        if (!from_file) {
            config.generator = from_cli;
        } else {
            if (given("--family"))
                config.generator.family = from_cli.family;
            if (given("--dim"))
                config.generator.dim = from_cli.dim;
            if (given("--seed"))
                config.generator.seed = from_cli.seed;
            if (given("--alpha"))
                config.generator.alpha = from_cli.alpha;
            if (given("--bases"))
                config.generator.bases = from_cli.bases;
            if (given("--side"))
                config.generator.side = from_cli.side;
            if (given("--lenz-m"))
                config.generator.points_per_circle = from_cli.points_per_circle;
            if (given("--lenz-scale"))
                config.generator.scale = from_cli.scale;
            if (given("--clusters"))
                config.generator.clusters = from_cli.clusters;
            if (given("--cluster-radius"))
                config.generator.cluster_radius = from_cli.cluster_radius;
        }
    }
    if (given("--region"))
        config.region = RegionSpec::parse(flags.region);
    if (given("--checkpoints"))
        config.checkpoints = parse_size_list(flags.checkpoints);
    if (given("--seeds"))
        config.seeds = parse_seeds(flags.seeds);
    if (given("--gamma"))
        config.gamma_assumed = flags.gamma;
    if (given("--eps"))
        config.epsilon = flags.epsilon;
    if (given("--tolerance"))
        config.tolerance = flags.tolerance;
    if (given("--oracle-samples"))
        config.oracle_samples = flags.oracle_samples;
    if (given("--oracle-seed"))
        config.oracle_seed = flags.oracle_seed;
    if (given("--threads"))
        config.threads = flags.threads;
    return config;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"weylinc: equidistribution exponents and incidence counts on the torus"};
    app.require_subcommand(1);

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate a point sequence");
    GeneratorFlags gen_flags;
    std::size_t gen_n = 1024;
    std::string gen_out;
    add_generator_flags(gen_cmd, gen_flags);
    gen_cmd->add_option("--n", gen_n, "number of points")->required();
    gen_cmd->add_option("--out", gen_out, "output path (default: stdout)");

    // weyl
    auto* weyl_cmd = app.add_subcommand("weyl", "exponential-sum profile as CSV");
    std::string weyl_in, weyl_checkpoints = "256,512,1024", weyl_out;
    int weyl_kmax = 0;
    double weyl_eps = 0.1;
    int weyl_threads = 1;
    weyl_cmd->add_option("--in", weyl_in, "sequence file")->required();
    weyl_cmd->add_option("--kmax", weyl_kmax, "frequency box radius (default per dim)");
    weyl_cmd->add_option("--eps", weyl_eps, "normalization epsilon");
    weyl_cmd->add_option("--checkpoints", weyl_checkpoints, "comma-separated N values");
    weyl_cmd->add_option("--threads", weyl_threads, "worker threads");
    weyl_cmd->add_option("--out", weyl_out, "CSV path (default: stdout)");

    // gamma
    auto* gamma_cmd = app.add_subcommand("gamma", "estimate the gamma exponent");
    std::string gamma_in, gamma_checkpoints = "256,512,1024,2048,4096";
    int gamma_kmax = 0;
    double gamma_eps = 0.1;
    int gamma_threads = 1;
    gamma_cmd->add_option("--in", gamma_in, "sequence file")->required();
    gamma_cmd->add_option("--kmax", gamma_kmax, "frequency box radius (default per dim)");
    gamma_cmd->add_option("--eps", gamma_eps, "normalization epsilon");
    gamma_cmd->add_option("--checkpoints", gamma_checkpoints, "comma-separated N values");
    gamma_cmd->add_option("--threads", gamma_threads, "worker threads");

    // incidence
    auto* inc_cmd = app.add_subcommand("incidence", "annulus pair count and remainder");
    std::string inc_in, inc_region = "annulus:0.25:0.30", inc_format = "json", inc_out,
                inc_counter = "grid";
    std::size_t inc_n = 0;
    int inc_threads = 1;
    inc_cmd->add_option("--in", inc_in, "sequence file")->required();
    inc_cmd->add_option("--region", inc_region, "annulus:<a>:<b>");
    inc_cmd->add_option("--n", inc_n, "prefix length (default: whole sequence)");
    inc_cmd->add_option("--counter", inc_counter, "grid | brute");
    inc_cmd->add_option("--format", inc_format, "json | csv");
    inc_cmd->add_option("--threads", inc_threads, "worker threads");
    inc_cmd->add_option("--out", inc_out, "output path (default: stdout)");

    // slab
    auto* slab_cmd = app.add_subcommand("slab", "weighted slab pair count and remainder");
    std::string slab_in, slab_in2, slab_region = "slab:0.5:0.7", slab_format = "json",
                slab_out;
    std::size_t slab_n = 0, slab_samples = 10'000'000;
    std::uint64_t slab_oracle_seed = 0x5EEDF00Dull;
    int slab_threads = 1;
    slab_cmd->add_option("--in", slab_in, "first sequence file")->required();
    slab_cmd->add_option("--in2", slab_in2, "second sequence file")->required();
    slab_cmd->add_option("--region", slab_region, "slab:<a>:<b>");
    slab_cmd->add_option("--n", slab_n, "prefix length (default: shorter sequence)");
    slab_cmd->add_option("--oracle-samples", slab_samples, "main-term MC samples");
    slab_cmd->add_option("--oracle-seed", slab_oracle_seed, "main-term MC seed");
    slab_cmd->add_option("--format", slab_format, "json | csv");
    slab_cmd->add_option("--threads", slab_threads, "worker threads");
    slab_cmd->add_option("--out", slab_out, "output path (default: stdout)");

    // scaling / support / diffset
    auto* scaling_cmd = app.add_subcommand("scaling", "remainder-exponent sweep");
    SweepFlags scaling_flags;
    add_sweep_flags(scaling_cmd, scaling_flags);

    auto* support_cmd = app.add_subcommand("support", "support-size growth sweep");
    SweepFlags support_flags;
    add_sweep_flags(support_cmd, support_flags);
    double support_quantum = 1e-9;
    support_cmd->add_option("--quantum", support_quantum, "snap grid for identity");

    auto* diffset_cmd = app.add_subcommand("diffset", "difference-set growth sweep");
    SweepFlags diffset_flags;
    add_sweep_flags(diffset_cmd, diffset_flags);

    // energy
    auto* energy_cmd = app.add_subcommand("energy", "discrete s-energy");
    std::string energy_in, energy_metric = "torus";
    double energy_s = 1.0;
    std::size_t energy_n = 0;
    energy_cmd->add_option("--in", energy_in, "sequence file")->required();
    energy_cmd->add_option("--s", energy_s, "energy exponent, 0 < s < d");
    energy_cmd->add_option("--metric", energy_metric, "torus | euclidean");
    energy_cmd->add_option("--n", energy_n, "prefix length (default: whole sequence)");

    // fourier-check
    auto* fourier_cmd = app.add_subcommand("fourier-check", "radial transform decay");
    std::string fourier_kind = "annulus", fourier_out;
    double fourier_a = 0.25, fourier_b = 0.30;
    int fourier_dim = 2, fourier_kmin = 4, fourier_kmax = 128;
    fourier_cmd->add_option("--kind", fourier_kind, "annulus | sphere");
    fourier_cmd->add_option("--a", fourier_a, "inner radius (sphere: the radius)");
    fourier_cmd->add_option("--b", fourier_b, "outer radius (annulus only)");
    fourier_cmd->add_option("--dim", fourier_dim, "ambient dimension, 2 or 3");
    fourier_cmd->add_option("--kmin", fourier_kmin, "smallest modulus");
    fourier_cmd->add_option("--kmax", fourier_kmax, "largest modulus");
    fourier_cmd->add_option("--out", fourier_out, "CSV path (default: stdout)");

    // adversarial
    auto* adv_cmd = app.add_subcommand("adversarial", "Dirichlet frequency search (d=1)");
    std::string adv_in;
    std::size_t adv_n = 5;
    std::uint64_t adv_seed = 1, adv_qmax = 3'200'000;
    double adv_eps = 0.05;
    adv_cmd->add_option("--in", adv_in, "sequence file (d=1); omitted: seeded iid points");
    adv_cmd->add_option("--n", adv_n, "point count when generating");
    adv_cmd->add_option("--seed", adv_seed, "seed when generating");
    adv_cmd->add_option("--eps", adv_eps, "approximation epsilon");
    adv_cmd->add_option("--qmax", adv_qmax, "search budget");

    // lenz-demo
    auto* lenz_cmd = app.add_subcommand("lenz-demo", "Lenz two-circle distance count");
    int lenz_m = 5;
    double lenz_scale = 0.25, lenz_eta = 1e-9;
    lenz_cmd->add_option("--m", lenz_m, "points per circle");
    lenz_cmd->add_option("--scale", lenz_scale, "circle radius");
    lenz_cmd->add_option("--eta", lenz_eta, "annulus half-width");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (gen_cmd->parsed()) {
            GeneratorConfig config = generator_from_flags(gen_flags);
            PointSequence seq = generate(config, gen_n);
            Output out(gen_out);
            write_sequence(out.stream(), seq);
            return 0;
        }

        if (weyl_cmd->parsed()) {
            PointSequence seq = read_sequence_file(weyl_in);
            int kmax = weyl_kmax > 0 ? weyl_kmax : default_kmax(seq.dim());
            FrequencySpec freq(seq.dim(), kmax);
            auto checkpoints = parse_size_list(weyl_checkpoints);
            WeylProfile profile = weyl_profile(seq, freq, checkpoints, weyl_eps, weyl_threads);
            Output out(weyl_out);
            auto& os = out.stream();
            for (int j = 1; j <= seq.dim(); ++j)
                os << "k_" << j << ',';
            os << "N,re,im,magnitude_over_N\n";
            for (std::size_t fi = 0; fi < freq.count(); ++fi) {
                auto k = freq.vector(fi);
                for (std::size_t c = 0; c < profile.checkpoints().size(); ++c) {
                    for (int kc : k)
                        os << kc << ',';
                    auto s = profile.sum(fi, c);
                    os << profile.checkpoints()[c] << ',' << format_double(s.real()) << ','
                       << format_double(s.imag()) << ','
                       << format_double(profile.magnitude_over_n(fi, c)) << '\n';
                }
            }
            return 0;
        }

        if (gamma_cmd->parsed()) {
            PointSequence seq = read_sequence_file(gamma_in);
            int kmax = gamma_kmax > 0 ? gamma_kmax : default_kmax(seq.dim());
            FrequencySpec freq(seq.dim(), kmax);
            auto checkpoints = parse_size_list(gamma_checkpoints);
            WeylProfile profile =
                weyl_profile(seq, freq, checkpoints, gamma_eps, gamma_threads);
            std::cout << gamma_fit_json(estimate_gamma(profile)) << '\n';
            return 0;
        }

        if (inc_cmd->parsed()) {
            PointSequence seq = read_sequence_file(inc_in);
            RegionSpec region = RegionSpec::parse(inc_region);
            if (region.kind != RegionSpec::Kind::Annulus)
                throw config_error("incidence: use the slab subcommand for slabs");
            std::size_t n = inc_n > 0 ? inc_n : seq.size();
            IncidenceReport report;
            if (inc_counter == "brute") {
                report.region = region;
                report.n = n;
                report.count = static_cast<double>(
                    count_annulus_pairs(seq, region.a, region.b, n, inc_threads));
                report.main_term = static_cast<double>(n) * static_cast<double>(n) *
                                   annulus_volume(region.a, region.b, seq.dim());
                report.remainder = report.count - report.main_term;
            } else if (inc_counter == "grid") {
                report = annulus_report(seq, region.a, region.b, n, inc_threads);
            } else {
                throw config_error("incidence: unknown counter '" + inc_counter + "'");
            }
            Output out(inc_out);
            if (inc_format == "csv")
                report_csv(out.stream(), report);
            else
                out.stream() << report_json(report) << '\n';
            return 0;
        }

        if (slab_cmd->parsed()) {
            PointSequence v = read_sequence_file(slab_in);
            PointSequence w = read_sequence_file(slab_in2);
            RegionSpec region = RegionSpec::parse(slab_region);
            if (region.kind != RegionSpec::Kind::Slab)
                throw config_error("slab: region must be slab:<a>:<b>");
            std::size_t n = slab_n > 0 ? slab_n : std::min(v.size(), w.size());
            IncidenceReport report = slab_report(v, w, region.a, region.b, n, slab_samples,
                                                 slab_oracle_seed, slab_threads);
            Output out(slab_out);
            if (slab_format == "csv")
                report_csv(out.stream(), report);
            else
                out.stream() << report_json(report) << '\n';
            return 0;
        }

        if (scaling_cmd->parsed()) {
            ExperimentConfig config = experiment_from_flags(scaling_cmd, scaling_flags);
            SweepResult result = scaling_sweep(config);
            Output out(scaling_flags.out);
            sweep_csv(out.stream(), result, /*with_main_term=*/true);
            std::cout << scaling_fit_json(result.fit) << '\n';
            return 0;
        }

        if (support_cmd->parsed() || diffset_cmd->parsed()) {
            bool is_support = support_cmd->parsed();
            const SweepFlags& flags = is_support ? support_flags : diffset_flags;
            const CLI::App* cmd = is_support ? support_cmd : diffset_cmd;
            ExperimentConfig config = experiment_from_flags(cmd, flags);
            SweepResult result = support_sweep(
                config, is_support ? GrowthStat::Support : GrowthStat::DiffSet);
            Output out(flags.out);
            sweep_csv(out.stream(), result, /*with_main_term=*/false);
            std::cout << scaling_fit_json(result.fit) << '\n';
            return 0;
        }

        if (energy_cmd->parsed()) {
            PointSequence seq = read_sequence_file(energy_in);
            std::size_t n = energy_n > 0 ? energy_n : seq.size();
            Metric metric;
            if (energy_metric == "torus")
                metric = Metric::Torus;
            else if (energy_metric == "euclidean")
                metric = Metric::Euclidean;
            else
                throw config_error("energy: unknown metric '" + energy_metric + "'");
            EnergyResult result = discrete_energy(seq, energy_s, n, metric);
            JsonWriter w;
            w.begin();
            w.key("value").value(result.value);
            w.key("skipped_pairs").value(result.skipped_pairs);
            w.key("s").value(energy_s);
            w.key("metric").value(energy_metric);
            w.key("N").value(static_cast<std::uint64_t>(n));
            w.end();
            std::cout << w.str() << '\n';
            return 0;
        }

        if (fourier_cmd->parsed()) {
            TransformKind kind;
            if (fourier_kind == "annulus")
                kind = TransformKind::AnnulusIndicator;
            else if (fourier_kind == "sphere")
                kind = TransformKind::SphereMeasure;
            else
                throw config_error("fourier-check: unknown kind '" + fourier_kind + "'");
            auto samples =
                sample_transform(kind, fourier_a, fourier_b, fourier_dim, fourier_kmin,
                                 fourier_kmax);
            DecayFit fit = fit_transform_decay(kind, fourier_a, fourier_b, fourier_dim,
                                               fourier_kmin, fourier_kmax);
            Output out(fourier_out);
            auto& os = out.stream();
            os << "abs_k,value,abs_value\n";
            for (const auto& s : samples)
                os << format_double(s.k_norm) << ',' << format_double(s.value) << ','
                   << format_double(std::fabs(s.value)) << '\n';
            JsonWriter w;
            w.begin();
            w.key("slope").value(fit.slope);
            w.key("intercept").value(fit.intercept);
            w.key("r_squared").value(fit.r_squared);
            w.key("range").begin_array().value(fit.k_min).value(fit.k_max).end_array();
            w.key("points_used").value(static_cast<std::uint64_t>(fit.points_used));
            w.end();
            std::cout << w.str() << '\n';
            return 0;
        }

        if (adv_cmd->parsed()) {
            std::vector<double> points;
            if (!adv_in.empty()) {
                PointSequence seq = read_sequence_file(adv_in);
                if (seq.dim() != 1)
                    throw config_error("adversarial: requires a d=1 sequence");
                points = seq.raw();
            } else {
                GeneratorConfig config;
                config.family = Family::IidUniform;
                config.dim = 1;
                config.seed = adv_seed;
                points = generate(config, adv_n).raw();
            }
            AdversarialResult result = adversarial_frequency(points, adv_eps, adv_qmax);
            JsonWriter w;
            w.begin();
            w.key("q").value(result.q);
            w.key("magnitude").value(result.magnitude);
            w.key("budget_limited").value(result.budget_limited);
            w.key("eps").value(adv_eps);
            w.key("qmax").value(adv_qmax);
            w.key("n").value(static_cast<std::uint64_t>(points.size()));
            w.end();
            std::cout << w.str() << '\n';
            return 0;
        }

        if (lenz_cmd->parsed()) {
            GeneratorConfig config;
            config.family = Family::Lenz;
            config.dim = 4;
            config.points_per_circle = lenz_m;
            config.scale = lenz_scale;
            std::size_t n = 2 * static_cast<std::size_t>(lenz_m);
            PointSequence seq = generate(config, n);
            double t = lenz_cross_distance(lenz_scale);
            std::uint64_t count = exact_distance_count(seq, t, n, lenz_eta);
            JsonWriter w;
            w.begin();
            w.key("n").value(static_cast<std::uint64_t>(n));
            w.key("m").value(static_cast<std::int64_t>(lenz_m));
            w.key("scale").value(lenz_scale);
            w.key("t").value(t);
            w.key("eta").value(lenz_eta);
            w.key("count").value(count);
            w.key("expected").value(static_cast<std::uint64_t>(n) * n / 2);
            w.end();
            std::cout << w.str() << '\n';
            return 0;
        }
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }

    std::cerr << "error: no subcommand\n" << app.help();
    return 2;
}

}  // namespace weylinc
