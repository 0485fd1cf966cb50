#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weylinc/core.hpp"

namespace weylinc {

enum class Family {
    IidUniform,
    Kronecker,
    Halton,
    Lattice,
    Lenz,
    ClusteredAdversarial,
};

Family family_from_string(const std::string& name);
std::string family_name(Family f);

/// Configuration of one point-sequence family.  Unused fields are ignored by
/// the other families.
struct GeneratorConfig {
    Family family = Family::IidUniform;
    int dim = 2;
    std::uint64_t seed = 1;

    // Kronecker: direction alpha; empty selects the default
    // (golden-ratio conjugate for d=1, frac(sqrt(prime)) for d>=2).
    std::vector<double> alpha;

    // Halton: digit bases, pairwise coprime; empty selects the first d primes.
    std::vector<int> bases;

    // Lattice: points (i_1/side, ..., i_d/side), row-major, cycling past side^d.
    int side = 4;

    // Lenz: two orthogonal circles in dim 4, m points each, radius `scale`,
    // centered at (1/2,1/2) in their coordinate planes.
    int points_per_circle = 5;
    double scale = 0.25;

    // ClusteredAdversarial: points packed into `clusters` balls of radius
    // cluster_radius around seeded random centers.
    int clusters = 4;
    double cluster_radius = 1e-3;

    /// Throws config_error naming the offending field.
    void validate() const;

    /// Rendered parameter record for provenance.
    std::string params_string() const;
};

/// Generates exactly n points.  Deterministic in (config, n); a prefix of a
/// longer run equals the shorter run.
PointSequence generate(const GeneratorConfig& config, std::size_t n);

/// Common Euclidean distance between the two Lenz circles after scaling.
double lenz_cross_distance(double scale);

/// Kronecker default direction for dimension d.
std::vector<double> default_kronecker_alpha(int d);

/// First d primes, the Halton default bases.
std::vector<int> first_primes(int d);

}  // namespace weylinc
