#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "otto/error.hpp"
#include "otto/kernels.hpp"
#include "otto/tcl_dynamics.hpp"

using otto::BathLabel;
using otto::BathSpec;

namespace {

const BathSpec kBath{BathLabel::Cold, 0.01, 0.4, 0.5};

}  // namespace

TEST_CASE("propagate: trivial cases") {
    const auto grid = otto::build_kernel_grid(kBath, 1.0, 20.0);
    const auto zero = otto::propagate(0.3, grid, 0.0);
    CHECK(zero.size() == 1);
    CHECK(zero.final_value() == 0.3);
    CHECK(zero.initial() == 0.3);

    const BathSpec weak{BathLabel::Cold, 1e-300, 0.4, 0.5};
    const auto frozen = otto::propagate(0.42, otto::build_kernel_grid(weak, 1.0, 20.0), 20.0);
    for (double v : frozen.values()) CHECK(v == doctest::Approx(0.42).epsilon(1e-15));
}

TEST_CASE("propagate: domain errors") {
    const auto grid = otto::build_kernel_grid(kBath, 1.0, 5.0);
    CHECK_THROWS_AS((void)otto::propagate(1.2, grid, 1.0), otto::Error);
    CHECK_THROWS_AS((void)otto::propagate(-0.1, grid, 1.0), otto::Error);
    CHECK_THROWS_AS((void)otto::propagate(0.5, grid, 6.0), otto::Error);
    CHECK_THROWS_AS((void)otto::propagate(0.5, grid, -1.0), otto::Error);
}

TEST_CASE("propagate: positivity violation is reported") {
    // far outside weak coupling the second-order rates overshoot
    const BathSpec strong{BathLabel::Cold, 40.0, 0.4, 0.05};
    const auto grid = otto::build_kernel_grid(strong, 1.0, 50.0);
    try {
        (void)otto::propagate(1.0, grid, 50.0);
        FAIL("expected positivity error");
    } catch (const otto::Error& e) {
        CHECK(e.kind() == otto::ErrorKind::Positivity);
    }
}

TEST_CASE("propagate: interpolation between nodes") {
    const auto grid = otto::build_kernel_grid(kBath, 1.0, 20.0);
    const auto trace = otto::propagate(1.0, grid, 3.33);
    CHECK(trace.end_time() == 3.33);
    const std::size_t i = 66;  // 3.30
    const double expected = trace[i] + 0.6 * (trace[i + 1] - trace[i]);
    CHECK(std::abs(trace.final_value() - expected) < 1e-15);
    CHECK_THROWS_AS((void)trace.at(3.5), otto::Error);
}

TEST_CASE("propagate: matches the closed-form solution with an independent quadrature") {
    // rho(t) = exp(A(t)) (rho0 - int_0^t b(s) exp(-A(s)) ds), integrated by plain Simpson here.
    const auto grid = otto::build_kernel_grid(kBath, 1.0, 40.0);
    const double rho0 = 0.8;
    const auto trace = otto::propagate(rho0, grid, 40.0);
    for (std::size_t n : {std::size_t{40}, std::size_t{400}, std::size_t{800}}) {
        std::vector<double> g(n + 1);
        for (std::size_t s = 0; s <= n; ++s) g[s] = grid.b()[s] * std::exp(-grid.a_integral()[s]);
        const double want = std::exp(grid.a_integral()[n]) * (rho0 - oracle::simpson(g, grid.step()));
        CAPTURE(n);
        CHECK(std::abs(trace[n] - want) < 1e-12);
    }
}

TEST_CASE("transition populations") {
    const auto grid = otto::build_kernel_grid(kBath, 1.0, 60.0);
    const auto zero = otto::transition_populations(grid, 0.0);
    CHECK(zero.from_ground.final_value() == 1.0);
    CHECK(zero.from_excited.final_value() == 0.0);

    const auto tr = otto::transition_populations(grid, 60.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < tr.from_ground.size(); ++i) {
        CHECK(tr.from_ground[i] >= -otto::kPositivityTolerance);
        CHECK(tr.from_ground[i] <= 1.0 + otto::kPositivityTolerance);
        CHECK(tr.from_excited[i] >= -otto::kPositivityTolerance);
        CHECK(tr.from_excited[i] <= 1.0 + otto::kPositivityTolerance);
        worst = std::max(worst, std::abs(tr.from_ground[i] - tr.from_excited[i] - std::exp(grid.a_integral()[i])));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("propagate is affine in the initial population") {
    const auto grid = otto::build_kernel_grid(kBath, 0.7, 30.0);
    const auto one = otto::propagate(1.0, grid, 30.0);
    const auto zero = otto::propagate(0.0, grid, 30.0);
    oracle::Rng rng(7);
    for (int k = 0; k < 20; ++k) {
        const double mu = rng.uniform();
        const auto mixed = otto::propagate(mu, grid, 30.0);
        double worst = 0.0;
        for (std::size_t i = 0; i < mixed.size(); ++i) {
            worst = std::max(worst, std::abs(mixed[i] - (mu * one[i] + (1.0 - mu) * zero[i])));
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("long strokes thermalize") {
    for (double w0 : {0.5, 1.0}) {
        const BathSpec bath{BathLabel::Hot, 0.01, 0.4, 1.0};
        const double rate = otto::markov_relaxation_rate(w0, bath);
        const double t = 12.0 / rate;
        const auto grid = otto::build_kernel_grid(bath, w0, t);
        const double stationary = otto::thermal_ground_population(w0, bath.temperature);
        CAPTURE(w0);
        CHECK(std::abs(otto::propagate(1.0, grid, t).final_value() - stationary) < 1e-3);
        CHECK(std::abs(otto::propagate(0.0, grid, t).final_value() - stationary) < 1e-3);
        // the gap between two trajectories decays at the relaxation rate alone
        const auto upper = otto::propagate(1.0, grid, t);
        const auto lower = otto::propagate(0.0, grid, t);
        for (double late : {2.0 / rate, 4.0 / rate, 8.0 / rate}) {
            const double measured = otto::instantaneous_decay_rate(upper, lower, late);
            CHECK(std::abs(measured / rate - 1.0) < 0.02);
        }
        CHECK_THROWS_AS((void)otto::instantaneous_decay_rate(upper, upper, 1.0), otto::Error);
    }
}

TEST_CASE("grid convergence of final populations") {
    const double t = 80.0;
    const auto coarse = otto::build_kernel_grid(kBath, 1.0, t, 0.05);
    const auto fine = otto::build_kernel_grid(kBath, 1.0, t, 0.025);
    for (double rho0 : {0.0, 0.5, 1.0}) {
        CHECK(std::abs(otto::propagate(rho0, coarse, t).final_value() - otto::propagate(rho0, fine, t).final_value()) <
              1e-7);
    }
}
