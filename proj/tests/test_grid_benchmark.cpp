#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>

#include "weylinc/generators.hpp"
#include "weylinc/incidence.hpp"

using namespace weylinc;

// Large-N equality run; the wall-clock ratio is informational (the grid path
// typically lands near 8x here) while the value equality is the contract.
TEST_CASE("grid counter equals brute force at N = 1e5 and is faster") {
    GeneratorConfig config;
    config.family = Family::IidUniform;
    config.dim = 2;
    config.seed = 5;
    const std::size_t n = 100000;
    PointSequence seq = generate(config, n);

    auto t0 = std::chrono::steady_clock::now();
    auto grid = count_annulus_pairs_grid(seq, 0.25, 0.30, n, 2);
    auto t1 = std::chrono::steady_clock::now();
    auto brute = count_annulus_pairs(seq, 0.25, 0.30, n, 2);
    auto t2 = std::chrono::steady_clock::now();

    double grid_s = std::chrono::duration<double>(t1 - t0).count();
    double brute_s = std::chrono::duration<double>(t2 - t1).count();
    double speedup = brute_s / grid_s;
    MESSAGE("grid ", grid_s, " s, brute ", brute_s, " s, speedup ", speedup, "x");

    CHECK(grid == brute);
    WARN_MESSAGE(speedup >= 5.0, "speedup below the expected 5x on this machine");
}
