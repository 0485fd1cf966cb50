#include "weylinc/core.hpp"

#include <array>
#include <numbers>
#include <sstream>

namespace weylinc {

double unit_ball_volume(int d) {
    if (d < 1)
        throw config_error("unit_ball_volume: d must be >= 1");
    constexpr double pi = std::numbers::pi;
    static const std::array<double, 8> table = {
        2.0,
        pi,
        4.0 * pi / 3.0,
        pi * pi / 2.0,
        8.0 * pi * pi / 15.0,
        pi * pi * pi / 6.0,
        16.0 * pi * pi * pi / 105.0,
        pi * pi * pi * pi / 24.0,
    };
    if (d <= 8)
        return table[static_cast<std::size_t>(d - 1)];
    return std::pow(pi, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
}

double annulus_volume(double a, double b, int d) {
    if (!(a >= 0.0 && a <= b))
        throw config_error("annulus_volume: need 0 <= a <= b");
    if (!(b < 0.5))
        throw config_error("annulus_volume: b must be < 1/2, torus balls are not "
                           "Euclidean beyond that radius");
    double omega = unit_ball_volume(d);
    // Two products and a subtraction, so volume(a,b) == volume(0,b) - volume(0,a)
    // holds exactly in floating point.
    return omega * std::pow(b, d) - omega * std::pow(a, d);
}

void RegionSpec::validate(bool theorem1_range) const {
    if (!(a > 0.0 && a <= b))
        throw config_error("region: need 0 < a <= b, got a=" + std::to_string(a) +
                           " b=" + std::to_string(b));
    if (kind == Kind::Annulus && metric == Metric::Torus && !(b < 0.5))
        throw config_error("region: torus annulus needs b < 1/2");
    if (theorem1_range && kind == Kind::Annulus && a < 0.01)
        throw config_error("region: annulus theorem range requires a >= 1/100");
    if (kind == Kind::Slab && a < 0.01)
        throw config_error("region: slab requires a >= 1/100");
}

RegionSpec RegionSpec::parse(const std::string& text) {
    std::istringstream in(text);
    std::string kind_str, a_str, b_str;
    if (!std::getline(in, kind_str, ':') || !std::getline(in, a_str, ':') ||
        !std::getline(in, b_str))
        throw config_error("region: expected <kind>:<a>:<b>, got '" + text + "'");
    RegionSpec region;
    if (kind_str == "annulus")
        region.kind = Kind::Annulus;
    else if (kind_str == "slab")
        region.kind = Kind::Slab;
    else
        throw config_error("region: unknown kind '" + kind_str + "'");
    try {
        region.a = std::stod(a_str);
        region.b = std::stod(b_str);
    } catch (const std::exception&) {
        throw config_error("region: bad endpoints in '" + text + "'");
    }
    region.validate();
    return region;
}

}  // namespace weylinc
