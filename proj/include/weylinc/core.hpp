#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylinc {

/// Invalid request: bad parameters, mismatched dimensions, malformed input.
/// The CLI maps this to exit code 2.
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Data-dependent failure: degenerate fits, all-zero statistics and the like.
/// The CLI maps this to exit code 3.
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Canonical representative of a torus coordinate: x - floor(x) in [0,1).
inline double reduce_mod1(double x) {
    double r = x - std::floor(x);
    if (r >= 1.0)
        r -= 1.0;
    if (r < 0.0)
        r = 0.0;
    return r;
}

enum class Metric { Torus, Euclidean };

/// A point of the d-torus, coordinates reduced to the half-open cube [0,1)^d.
struct Point {
    std::vector<double> coords;

    int dim() const { return static_cast<int>(coords.size()); }

    static Point reduced(std::vector<double> raw) {
        for (double& c : raw)
            c = reduce_mod1(c);
        return Point{std::move(raw)};
    }
};

/// Generator identity carried by every sequence: regenerating from the same
/// provenance must reproduce the sequence bit for bit.
struct Provenance {
    std::string family;
    std::string params;
    std::uint64_t seed = 0;
    std::string rng = "splitmix64";
};

/// An ordered list of d-dimensional torus points in flat row-major storage.
class PointSequence {
public:
    PointSequence() = default;

    PointSequence(int dim, std::vector<double> data, Provenance prov)
        : dim_(dim), data_(std::move(data)), prov_(std::move(prov)) {
        if (dim_ < 1)
            throw config_error("PointSequence: dim must be >= 1");
        if (data_.size() % static_cast<std::size_t>(dim_) != 0)
            throw config_error("PointSequence: data size not a multiple of dim");
        for (double& c : data_)
            c = reduce_mod1(c);
    }

    int dim() const { return dim_; }
    std::size_t size() const { return data_.size() / static_cast<std::size_t>(dim_); }

    std::span<const double> point(std::size_t i) const {
        return {data_.data() + i * static_cast<std::size_t>(dim_),
                static_cast<std::size_t>(dim_)};
    }

    const std::vector<double>& raw() const { return data_; }
    const Provenance& provenance() const { return prov_; }

    /// Prefix restriction used by checkpointed experiments.
    void require_length(std::size_t n) const {
        if (n > size())
            throw config_error("requested N=" + std::to_string(n) +
                               " exceeds sequence length " + std::to_string(size()));
    }

private:
    int dim_ = 1;
    std::vector<double> data_;
    Provenance prov_;
};

/// Flat-torus distance: min over integer shifts of the Euclidean norm.
/// Both arguments must hold canonical coordinates in [0,1).
inline double torus_distance(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw config_error("torus_distance: points of dimension " +
                           std::to_string(x.size()) + " and " + std::to_string(y.size()) +
                           " are incompatible");
    double s = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        double dx = std::fabs(x[j] - y[j]);
        double w = dx <= 0.5 ? dx : 1.0 - dx;
        s += w * w;
    }
    return std::sqrt(s);
}

inline double torus_distance(const Point& x, const Point& y) {
    return torus_distance(std::span<const double>(x.coords), std::span<const double>(y.coords));
}

inline double euclidean_distance(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw config_error("euclidean_distance: dimension mismatch");
    double s = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        double dx = x[j] - y[j];
        s += dx * dx;
    }
    return std::sqrt(s);
}

/// Volume of the unit ball in R^d.
double unit_ball_volume(int d);

/// Lebesgue measure of the torus annulus {a <= ||x|| <= b}, valid for b < 1/2
/// where the metric ball is still Euclidean.  Computed as
/// omega_d*b^d - omega_d*a^d so that volumes are exactly additive in [a,b].
double annulus_volume(double a, double b, int d);

/// An annulus [a,b] under a point metric, or a dot-product slab a <= x.y <= b.
struct RegionSpec {
    enum class Kind { Annulus, Slab };

    Kind kind = Kind::Annulus;
    double a = 0.0;
    double b = 0.0;
    Metric metric = Metric::Torus;  // annulus only
    std::string weight = "bump";    // slab only: cutoff identifier

    /// theorem1_range additionally enforces the a >= 1/100 range of the
    /// annulus theorems.
    void validate(bool theorem1_range = false) const;

    /// Parses "annulus:<a>:<b>" or "slab:<a>:<b>".
    static RegionSpec parse(const std::string& text);

    std::string kind_name() const { return kind == Kind::Annulus ? "annulus" : "slab"; }
};

}  // namespace weylinc
