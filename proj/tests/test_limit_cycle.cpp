#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "otto/error.hpp"
#include "otto/kernels.hpp"
#include "otto/limit_cycle.hpp"

using otto::BathLabel;
using otto::BathSpec;

namespace {

const BathSpec kHot{BathLabel::Hot, 0.01, 0.4, 1.0};
const BathSpec kCold{BathLabel::Cold, 0.01, 0.4, 0.2};

struct Grids {
    otto::KernelGrid hot = otto::build_kernel_grid(kHot, 1.0, 120.0);
    otto::KernelGrid cold = otto::build_kernel_grid(kCold, 0.5, 120.0);
};

const Grids& grids() {
    static const Grids g;
    return g;
}

}  // namespace

TEST_CASE("fixed point: closed form on hand-built maps") {
    const otto::StrokeMap hot{0.9, 0.3};
    const otto::StrokeMap cold{0.95, 0.6};
    const auto s = otto::fixed_point(hot, cold);
    // P^h = c(h(P^h)) solved by hand: P = 0.6 + 0.35 (0.3 + 0.6 P)
    const double p = (0.6 + 0.35 * 0.3) / (1.0 - 0.35 * 0.6);
    CHECK(std::abs(s.entering_hot - p) < 1e-15);
    CHECK(std::abs(s.entering_cold - hot.apply(p)) < 1e-15);
    CHECK(std::abs(s.p0 - 0.6 * 0.35) < 1e-15);
    CHECK(s.hot_ground + s.hot_excited == 1.0);
    CHECK(s.cold_ground + s.cold_excited == 1.0);
    CHECK(std::abs(s.hot_ground - s.entering_cold) < 1e-15);
    CHECK(std::abs(s.cold_ground - s.entering_hot) < 1e-15);
}

TEST_CASE("fixed point: singular map") {
    const otto::StrokeMap identity{1.0, 0.0};
    try {
        (void)otto::fixed_point(identity, identity);
        FAIL("expected singular map");
    } catch (const otto::Error& e) {
        CHECK(e.kind() == otto::ErrorKind::SingularMap);
    }
    CHECK_THROWS_AS((void)otto::fixed_point(0.0, 10.0, grids().hot, grids().cold), otto::Error);
    CHECK_THROWS_AS((void)otto::fixed_point(10.0, -1.0, grids().hot, grids().cold), otto::Error);
}

TEST_CASE("fixed point equals the limit of the iterated map") {
    double worst = 0.0;
    double worst_bookkeeping = 0.0;
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            const double th = 10.0 + 12.0 * i;
            const double tc = 10.0 + 12.0 * j;
            const auto lc = otto::fixed_point(th, tc, grids().hot, grids().cold);
            const auto hot = otto::stroke_map(lc.hot);
            const auto cold = otto::stroke_map(lc.cold);
            for (double seed : {0.0, 0.5, 1.0}) {
                const double lib = otto::iterate_map(seed, 10000, hot, cold);
                const double own = oracle::iterate_fixed_point(seed, 10000, hot.from_ground, hot.from_excited,
                                                               cold.from_ground, cold.from_excited);
                worst = std::max({worst, std::abs(lib - lc.state.entering_hot), std::abs(own - lc.state.entering_hot)});
            }
            const auto& s = lc.state;
            worst_bookkeeping = std::max(worst_bookkeeping, std::abs(s.entering_hot - cold.apply(s.entering_cold)));
            for (double v : {s.entering_hot, s.entering_cold, s.hot_ground, s.hot_excited, s.cold_ground,
                             s.cold_excited}) {
                CHECK(v >= -1e-9);
                CHECK(v <= 1.0 + 1e-9);
            }
            CHECK(std::abs(1.0 - s.p0) > 0.0);
        }
    }
    CHECK(worst < 1e-10);
    CHECK(worst_bookkeeping < 1e-10);
}

TEST_CASE("iterate_map contracts monotonically") {
    const auto lc = otto::fixed_point(30.0, 20.0, grids().hot, grids().cold);
    const auto hot = otto::stroke_map(lc.hot);
    const auto cold = otto::stroke_map(lc.cold);
    CHECK(otto::iterate_map(0.25, 0, hot, cold) == 0.25);
    double prev = otto::iterate_map(0.0, 1, hot, cold);
    double prev_step = std::abs(prev - 0.0);
    for (long n = 2; n < 50; ++n) {
        const double next = otto::iterate_map(0.0, n, hot, cold);
        const double step = std::abs(next - prev);
        CHECK(step < prev_step);
        prev_step = step;
        prev = next;
    }
    CHECK(std::abs(lc.state.p0) < 1.0);
}

TEST_CASE("identical baths give equal entering populations") {
    const auto grid = otto::build_kernel_grid(kHot, 1.0, 60.0);
    const auto lc = otto::fixed_point(25.0, 25.0, grid, grid);
    CHECK(std::abs(lc.state.entering_hot - lc.state.entering_cold) < 1e-14);
    CHECK(std::abs(lc.state.hot_excited - lc.state.cold_excited) < 1e-14);
}

TEST_CASE("long strokes reach the thermal populations") {
    const double rate_h = otto::markov_relaxation_rate(1.0, kHot);
    const double rate_c = otto::markov_relaxation_rate(0.5, kCold);
    const double th = 12.0 / rate_h;
    const double tc = 12.0 / rate_c;
    const auto hot_grid = otto::build_kernel_grid(kHot, 1.0, th);
    const auto cold_grid = otto::build_kernel_grid(kCold, 0.5, tc);
    const auto lc = otto::fixed_point(th, tc, hot_grid, cold_grid);
    CHECK(std::abs(lc.state.hot_ground - otto::thermal_ground_population(1.0, kHot.temperature)) < 1e-3);
    CHECK(std::abs(lc.state.cold_ground - otto::thermal_ground_population(0.5, kCold.temperature)) < 1e-3);
}
