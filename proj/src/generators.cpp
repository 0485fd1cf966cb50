#include "weylinc/generators.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "weylinc/rng.hpp"

namespace weylinc {

Family family_from_string(const std::string& name) {
    if (name == "iid")
        return Family::IidUniform;
    if (name == "kronecker")
        return Family::Kronecker;
    if (name == "halton")
        return Family::Halton;
    if (name == "lattice")
        return Family::Lattice;
    if (name == "lenz")
        return Family::Lenz;
    if (name == "clustered")
        return Family::ClusteredAdversarial;
    throw config_error("unknown generator family '" + name + "'");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::IidUniform: return "iid";
        case Family::Kronecker: return "kronecker";
        case Family::Halton: return "halton";
        case Family::Lattice: return "lattice";
        case Family::Lenz: return "lenz";
        case Family::ClusteredAdversarial: return "clustered";
    }
    return "?";
}

std::vector<int> first_primes(int d) {
    std::vector<int> primes;
    int candidate = 2;
    while (static_cast<int>(primes.size()) < d) {
        bool is_prime = true;
        for (int p : primes) {
            if (p * p > candidate)
                break;
            if (candidate % p == 0) {
                is_prime = false;
                break;
            }
        }
        if (is_prime)
            primes.push_back(candidate);
        ++candidate;
    }
    return primes;
}

std::vector<double> default_kronecker_alpha(int d) {
    if (d == 1)
        return {(std::sqrt(5.0) - 1.0) / 2.0};  // golden-ratio conjugate
    std::vector<double> alpha;
    for (int p : first_primes(d))
        alpha.push_back(reduce_mod1(std::sqrt(static_cast<double>(p))));
    return alpha;
}

void GeneratorConfig::validate() const {
    if (dim < 1)
        throw config_error("generator: dim must be >= 1");
    switch (family) {
        case Family::IidUniform:
            break;
        case Family::Kronecker:
            if (!alpha.empty() && static_cast<int>(alpha.size()) != dim)
                throw config_error("generator: alpha must have one entry per dimension");
            break;
        case Family::Halton: {
            std::vector<int> b = bases.empty() ? first_primes(dim) : bases;
            if (static_cast<int>(b.size()) != dim)
                throw config_error("generator: bases must have one entry per dimension");
            for (int v : b)
                if (v < 2)
                    throw config_error("generator: bases entries must be >= 2");
            for (std::size_t i = 0; i < b.size(); ++i)
                for (std::size_t j = i + 1; j < b.size(); ++j)
                    if (std::gcd(b[i], b[j]) != 1)
                        throw config_error("generator: bases must be pairwise coprime");
            break;
        }
        case Family::Lattice:
            if (side < 1)
                throw config_error("generator: side must be >= 1");
            break;
        case Family::Lenz:
            if (dim != 4)
                throw config_error("generator: lenz requires dim = 4");
            if (points_per_circle < 1)
                throw config_error("generator: points_per_circle must be >= 1");
            if (!(scale > 0.0 && scale <= 0.25))
                throw config_error("generator: scale must be in (0, 1/4]");
            break;
        case Family::ClusteredAdversarial:
            if (clusters < 1)
                throw config_error("generator: clusters must be >= 1");
            if (!(cluster_radius > 0.0))
                throw config_error("generator: cluster_radius must be > 0");
            break;
    }
}

std::string GeneratorConfig::params_string() const {
    std::ostringstream out;
    switch (family) {
        case Family::IidUniform:
            break;
        case Family::Kronecker: {
            out << "alpha=";
            const auto& a = alpha.empty() ? default_kronecker_alpha(dim) : alpha;
            for (std::size_t i = 0; i < a.size(); ++i)
                out << (i ? "," : "") << a[i];
            break;
        }
        case Family::Halton: {
            out << "bases=";
            const auto b = bases.empty() ? first_primes(dim) : bases;
            for (std::size_t i = 0; i < b.size(); ++i)
                out << (i ? "," : "") << b[i];
            break;
        }
        case Family::Lattice:
            out << "side=" << side;
            break;
        case Family::Lenz:
            out << "m=" << points_per_circle << " scale=" << scale;
            break;
        case Family::ClusteredAdversarial:
            out << "clusters=" << clusters << " radius=" << cluster_radius;
            break;
    }
    return out.str();
}

namespace {

std::vector<double> generate_iid(const GeneratorConfig& c, std::size_t n) {
    SplitMix64 rng(c.seed);
    std::vector<double> data;
    data.reserve(n * static_cast<std::size_t>(c.dim));
    for (std::size_t i = 0; i < n * static_cast<std::size_t>(c.dim); ++i)
        data.push_back(rng.next_double());
    return data;
}

std::vector<double> generate_kronecker(const GeneratorConfig& c, std::size_t n) {
    const auto alpha = c.alpha.empty() ? default_kronecker_alpha(c.dim) : c.alpha;
    std::vector<double> data;
    data.reserve(n * static_cast<std::size_t>(c.dim));
    for (std::size_t i = 1; i <= n; ++i)
        for (int j = 0; j < c.dim; ++j)
            data.push_back(reduce_mod1(static_cast<double>(i) * alpha[static_cast<std::size_t>(j)]));
    return data;
}

double radical_inverse(std::uint64_t index, int base) {
    double inv_base = 1.0 / base;
    double scale = inv_base;
    double value = 0.0;
    while (index > 0) {
        value += static_cast<double>(index % static_cast<std::uint64_t>(base)) * scale;
        index /= static_cast<std::uint64_t>(base);
        scale *= inv_base;
    }
    return value;
}

std::vector<double> generate_halton(const GeneratorConfig& c, std::size_t n) {
    const auto bases = c.bases.empty() ? first_primes(c.dim) : c.bases;
    std::vector<double> data;
    data.reserve(n * static_cast<std::size_t>(c.dim));
    for (std::size_t i = 1; i <= n; ++i)
        for (int j = 0; j < c.dim; ++j)
            data.push_back(radical_inverse(i, bases[static_cast<std::size_t>(j)]));
    return data;
}

std::vector<double> generate_lattice(const GeneratorConfig& c, std::size_t n) {
    const std::uint64_t side = static_cast<std::uint64_t>(c.side);
    std::uint64_t period = 1;
    for (int j = 0; j < c.dim; ++j)
        period *= side;  // side^d; cycles for n beyond one period
    std::vector<double> data;
    data.reserve(n * static_cast<std::size_t>(c.dim));
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t idx = static_cast<std::uint64_t>(i) % period;
        // Most significant digit is coordinate 0.
        std::uint64_t place = period / side;
        for (int j = 0; j < c.dim; ++j) {
            std::uint64_t digit = (idx / place) % side;
            data.push_back(static_cast<double>(digit) / static_cast<double>(side));
            place = place == 1 ? 1 : place / side;
        }
    }
    return data;
}

std::vector<double> generate_lenz(const GeneratorConfig& c, std::size_t n) {
    // Two orthogonal circles of radius `scale` centered at (1/2,1/2) in
    // coordinate planes (1,2) and (3,4); the natural sequence is the m points
    // of the first circle followed by the m points of the second, cycling.
    const int m = c.points_per_circle;
    const double r = c.scale;
    std::vector<double> data;
    data.reserve(n * 4);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t idx = i % (2 * static_cast<std::size_t>(m));
        bool second = idx >= static_cast<std::size_t>(m);
        double theta = 2.0 * std::numbers::pi * static_cast<double>(idx % static_cast<std::size_t>(m)) /
                       static_cast<double>(m);
        double u = 0.5 + r * std::cos(theta);
        double v = 0.5 + r * std::sin(theta);
        if (!second) {
            data.insert(data.end(), {u, v, 0.5, 0.5});
        } else {
            data.insert(data.end(), {0.5, 0.5, u, v});
        }
    }
    return data;
}

std::vector<double> generate_clustered(const GeneratorConfig& c, std::size_t n) {
    SplitMix64 center_rng(SplitMix64::derive(c.seed, 0xC1u));
    std::vector<double> centers;
    for (int j = 0; j < c.clusters * c.dim; ++j)
        centers.push_back(center_rng.next_double());

    SplitMix64 rng(c.seed);
    std::vector<double> data;
    data.reserve(n * static_cast<std::size_t>(c.dim));
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t cluster = i % static_cast<std::size_t>(c.clusters);
        for (int j = 0; j < c.dim; ++j) {
            double offset = c.cluster_radius * (2.0 * rng.next_double() - 1.0);
            data.push_back(reduce_mod1(centers[cluster * static_cast<std::size_t>(c.dim) +
                                               static_cast<std::size_t>(j)] +
                                       offset));
        }
    }
    return data;
}

}  // namespace

PointSequence generate(const GeneratorConfig& config, std::size_t n) {
    if (n < 1)
        throw config_error("generate: n must be >= 1");
    config.validate();

    std::vector<double> data;
    switch (config.family) {
        case Family::IidUniform: data = generate_iid(config, n); break;
        case Family::Kronecker: data = generate_kronecker(config, n); break;
        case Family::Halton: data = generate_halton(config, n); break;
        case Family::Lattice: data = generate_lattice(config, n); break;
        case Family::Lenz: data = generate_lenz(config, n); break;
        case Family::ClusteredAdversarial: data = generate_clustered(config, n); break;
    }

    Provenance prov;
    prov.family = family_name(config.family);
    prov.params = config.params_string();
    prov.seed = config.seed;
    return PointSequence(config.dim, std::move(data), std::move(prov));
}

double lenz_cross_distance(double scale) {
    // scale = 1 is the unscaled construction with its sqrt(2) cross distance;
    // the generator itself caps scale at 1/4 so coordinates stay in the cube.
    if (!(scale > 0.0 && scale <= 1.0))
        throw config_error("lenz_cross_distance: scale must be in (0, 1]");
    return std::numbers::sqrt2 * scale;
}

}  // namespace weylinc
