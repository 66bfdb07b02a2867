// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "otto/cycle_analysis.hpp"
#include "otto/energetics.hpp"
#include "otto/error.hpp"
#include "otto/kernels.hpp"
#include "otto/limit_cycle.hpp"
#include "otto/special_functions.hpp"
#include "otto/sweep.hpp"
#include "otto/tcl_dynamics.hpp"
#include "otto/work_extraction.hpp"

using namespace otto;
using std::numbers::pi;

namespace tol {
constexpr double kKernelRelative = 1e-6;
constexpr double kKernelSeconds = 10.0;
constexpr double kTrigammaIdentity = 1e-12;
constexpr double kTrigammaRecurrence = 1e-11;
constexpr double kThermalPopulation = 1e-3;
constexpr double kDecayRateRelative = 0.02;
constexpr double kFixedPoint = 1e-10;
constexpr long kMapIterations = 10'000;
constexpr double kConservationSum = 1e-14;
constexpr double kInteractionPaths = 1e-10;
constexpr double kCommutator = 1e-13;
constexpr double kLevel1 = 1e-12;
constexpr double kExpectedWork = 1e-13;
constexpr double kMarkovEfficiency = 1e-12;
constexpr double kMarkovSeconds = 5.0;
constexpr double kStructureSeconds = 300.0;
constexpr double kSweepSeconds = 60.0;
}  // namespace tol

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

std::string sweep_csv(const SweepTable& table) {
    std::ostringstream os;
    write_sweep_csv(os, table);
    return os.str();
}

Outcome kernel_oracle() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (double temperature : {0.5, 1.0, 2.0}) {
        const BathSpec bath{BathLabel::Hot, 0.01, 0.4, temperature};
        for (int i = 0; i < 50; ++i) {
            const double tau = 100.0 * i / 49.0;
            const double d1 = noise_kernel(tau, bath);
            const double d2 = dissipation_kernel(tau, bath);
            const double q1 = integrate_semi_infinite(
                [&](double w) { return oracle::noise_integrand(w, tau, bath); }, bath.cutoff,
                std::max(1e-15, 1e-9 * std::abs(d1)));
            worst = std::max(worst, std::abs(d1 - q1) / std::abs(q1));
            if (tau > 0.0) {
                const double q2 = integrate_semi_infinite(
                    [&](double w) { return oracle::dissipation_integrand(w, tau, bath); }, bath.cutoff,
                    std::max(1e-15, 1e-9 * std::abs(d2)));
                worst = std::max(worst, std::abs(d2 - q2) / std::abs(q2));
            }
        }
    }
    const double elapsed = seconds_since(start);
    return {worst < tol::kKernelRelative && elapsed < tol::kKernelSeconds,
            fmt("max relative error %.2e (< %.0e), %.2f s (< %.0f s)", worst, tol::kKernelRelative, elapsed,
                tol::kKernelSeconds)};
}

Outcome trigamma_checks() {
    const double e1 = std::abs(trigamma(1.0) - pi * pi / 6.0);
    const double e2 = std::abs(trigamma(0.5) - pi * pi / 2.0);
    oracle::Rng rng(2026);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const ComplexValue z{rng.uniform(0.1, 10.0), rng.uniform(-10.0, 10.0)};
        worst = std::max(worst, std::abs(trigamma(z) - trigamma(z + 1.0) - 1.0 / (z * z)));
    }
    return {e1 < tol::kTrigammaIdentity && e2 < tol::kTrigammaIdentity && worst < tol::kTrigammaRecurrence,
            fmt("|psi'(1)-pi^2/6| = %.1e, |psi'(1/2)-pi^2/2| = %.1e, recurrence residual %.1e", e1, e2, worst)};
}

Outcome thermalization() {
    struct Set {
        double omega, temperature, coupling, cutoff;
    };
    const Set sets[] = {{1.0, 1.0, 0.01, 0.4}, {0.5, 0.2, 0.01, 0.4}, {0.7, 2.0, 0.01, 0.4},
                        {1.0, 0.3, 0.02, 0.6}, {0.3, 0.5, 0.01, 0.3}};
    double worst_pop = 0.0;
    double worst_rate = 0.0;
    for (const auto& s : sets) {
        const BathSpec bath{BathLabel::Hot, s.coupling, s.cutoff, s.temperature};
        const double rate = markov_relaxation_rate(s.omega, bath);
        const double stationary = thermal_ground_population(s.omega, s.temperature);
        const double t = 12.0 / rate;
        const auto grid = build_kernel_grid(bath, s.omega, t);
        for (double rho0 : {0.0, 1.0}) {
            const auto trace = propagate(rho0, grid, t);
            worst_pop = std::max(worst_pop, std::abs(trace.final_value() - stationary));
        }
        // gap between the trajectories from |0> and |1>, late relative to the bath memory 1/Omega
        const auto upper = propagate(1.0, grid, t);
        const auto lower = propagate(0.0, grid, t);
        for (double late : {2.0 / rate, 4.0 / rate, 8.0 / rate}) {
            const double measured = instantaneous_decay_rate(upper, lower, late);
            worst_rate = std::max(worst_rate, std::abs(measured / rate - 1.0));
        }
    }
    return {worst_pop < tol::kThermalPopulation && worst_rate < tol::kDecayRateRelative,
            fmt("5 sets: max |rho00 - stationary| %.1e (< %.0e), max decay-rate deviation %.2f%% (< 2%%)",
                worst_pop, tol::kThermalPopulation, 100.0 * worst_rate)};
}

Outcome limit_cycle_oracle() {
    const CycleParameters p;
    const auto hot = build_kernel_grid(p.hot, p.omega_hot, 120.0);
    const auto cold = build_kernel_grid(p.cold, p.omega_cold, 120.0);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            const double th = 12.0 * (i + 1);
            const double tc = 12.0 * (j + 1);
            const auto lc = fixed_point(th, tc, hot, cold);
            const auto mh = stroke_map(lc.hot);
            const auto mc = stroke_map(lc.cold);
            for (double seed : {0.0, 0.5, 1.0}) {
                worst = std::max(worst, std::abs(iterate_map(seed, tol::kMapIterations, mh, mc) - lc.state.entering_hot));
            }
        }
    }
    return {worst < tol::kFixedPoint,
            fmt("10x10 grid, seeds {0, 0.5, 1}: max |closed form - iterated| %.1e (< %.0e)", worst, tol::kFixedPoint)};
}

Outcome energy_conservation() {
    const CycleModel model(CycleParameters{}, Dynamics::Tcl2, 120.0, 120.0);
    double worst_sum = 0.0;
    for (int i = 1; i <= 50; ++i) {
        for (int j = 1; j <= 50; ++j) {
            const auto r = model.evaluate(2.4 * i, 2.4 * j);
            for (const auto* e : {&r.hot, &r.cold}) {
                worst_sum = std::max(worst_sum, std::abs(e->qubit + e->bath + e->interaction));
            }
        }
    }
    oracle::Rng rng(38);
    double worst_path = 0.0;
    for (int k = 0; k < 20; ++k) {
        const double th = rng.uniform(0.5, 120.0);
        const double tc = rng.uniform(0.5, 120.0);
        const auto r = model.evaluate(th, tc);
        const auto lc = fixed_point(th, tc, model.hot_grid(), model.cold_grid());
        worst_path = std::max(worst_path, std::abs(interaction_energy_direct(lc.state, BathLabel::Hot,
                                                                             model.hot_grid(), lc.hot, th) -
                                                   r.hot.interaction));
        worst_path = std::max(worst_path, std::abs(interaction_energy_direct(lc.state, BathLabel::Cold,
                                                                             model.cold_grid(), lc.cold, tc) -
                                                   r.cold.interaction));
    }
    return {worst_sum < tol::kConservationSum && worst_path < tol::kInteractionPaths,
            fmt("max |dE_S + dE_B + dE_I| %.1e (< %.0e) on 50x50; direct vs negative-sum dE_I %.1e (< %.0e) at 20 "
                "points",
                worst_sum, tol::kConservationSum, worst_path, tol::kInteractionPaths)};
}

Outcome work_extraction_checks() {
    const auto u = build_unitary();
    double commutator = 0.0;
    double level1 = 0.0;
    double level4 = 0.0;
    double expected = 0.0;
    bool verifier_ok = true;
    oracle::Rng rng(31);
    for (int k = 0; k < 100; ++k) {
        const double wc = rng.uniform(0.05, 2.0);
        const double wh = wc + rng.uniform(0.01, 2.0);
        const double excited = rng.uniform();
        for (auto dir : {Direction::Expansion, Direction::Compression}) {
            const auto h = build_hamiltonian(wh, wc, dir);
            const auto report = verify_conservation(h, u, excited);
            verifier_ok = verifier_ok && report.ok();
            commutator = std::max(commutator, report.commutator_max);
            level1 = std::max(level1, std::abs(report.level1_residual));
            level4 = std::max(level4, report.level4_residual);
            const auto outcome = measure_storage(apply_extraction(excited, 1.0 - excited, u), h);
            expected = std::max(expected, std::abs(outcome.expected_work() - expected_work_closed_form(excited, h)));
        }
    }
    return {verifier_ok && commutator < tol::kCommutator && level1 < tol::kLevel1 && expected < tol::kExpectedWork &&
                level4 == 0.0,
            fmt("||[U,H]||max %.1e, Level-1 %.1e, <w> vs closed form %.1e, Level-4 weight outside %.1e", commutator,
                level1, expected, level4)};
}

Outcome markov_reference() {
    const auto start = std::chrono::steady_clock::now();
    const CycleParameters p;
    const CycleModel model(p, Dynamics::Markov, 120.0, 120.0);
    const double target = 1.0 - p.omega_cold / p.omega_hot;
    int engines = 0;
    double max_interaction = 0.0;
    double worst_eta = 0.0;
    for (int i = 1; i <= 20; ++i) {
        for (int j = 1; j <= 20; ++j) {
            const auto r = model.evaluate(6.0 * i, 6.0 * j);
            engines += r.mode == Mode::Engine;
            max_interaction = std::max({max_interaction, std::abs(r.hot.interaction), std::abs(r.cold.interaction)});
            worst_eta = std::max(worst_eta, r.efficiency ? std::abs(*r.efficiency - target) : 1.0);
        }
    }
    const double elapsed = seconds_since(start);
    return {engines == 400 && max_interaction == 0.0 && worst_eta < tol::kMarkovEfficiency &&
                elapsed < tol::kMarkovSeconds,
            fmt("20x20: %d/400 engine, max |dE_I| %.1e, max |eta - (1 - w_c/w_h)| %.1e, %.3f s", engines,
                max_interaction, worst_eta, elapsed)};
}

// One candidate absolute scale for the qualitative structure check.
struct Structure {
    bool ok = false;
    std::string why;
};

Structure check_structure(double omega_h, double t_h_bath) {
    constexpr double kTh = 60.0;
    constexpr double kTcMax = 120.0;
    constexpr double kScanStep = 0.25;
    CycleParameters p;
    p.omega_hot = omega_h;
    p.omega_cold = 0.5 * omega_h;
    p.hot.temperature = t_h_bath;
    p.cold.temperature = 0.2 * t_h_bath;
    const CycleModel model(p, Dynamics::Tcl2, kTh, kTcMax);

    std::string sequence;
    for (double tc = kScanStep; tc <= kTcMax + 1e-9; tc += kScanStep) {
        const auto r = model.evaluate(kTh, tc);
        const char c = r.mode == Mode::HeatPump ? 'P' : r.mode == Mode::Heater ? 'H' : r.mode == Mode::Engine ? 'E' : 'O';
        if (sequence.empty() || sequence.back() != c) sequence += c;
        if (!(r.hot.interaction < 0.0) || !(r.cold.interaction < 0.0)) return {false, "dE_I >= 0 at a sample"};
        const bool division = r.flow_cold == Flow::EnergyDivision;
        const bool alpha_ge_1 = r.alpha_cold && *r.alpha_cold >= 1.0;
        if (division != alpha_ge_1) return {false, fmt("alpha_c >= 1 and cold division disagree at t_c = %g", tc)};
    }
    if (sequence != "PHE") return {false, "mode sequence " + sequence};
    const auto b = find_boundaries([&](double tc) { return model.evaluate(kTh, tc); }, kScanStep, kTcMax, kScanStep);
    if (!b.t0 || !b.t1) return {false, "boundaries not bracketed"};
    if (!(0.0 < *b.t0 && *b.t0 < *b.t1)) return {false, "t0 >= t1"};
    const double gap = std::abs(*b.t0_hot_qubit - *b.t0_cold_qubit);
    if (gap > 2.0 * kBoundaryRelativeTolerance * *b.t0) return {false, fmt("crossings differ by %.2e", gap)};
    return {true, fmt("t0^c = %.4f, t1^c = %.4f, crossing gap %.1e", *b.t0, *b.t1, gap)};
}

Outcome qualitative_structure() {
    const auto start = std::chrono::steady_clock::now();
    // scan order: omega_h outer, T_h inner, both 0.2 .. 2.0 in steps of 0.2
    int tried = 0;
    for (int i = 1; i <= 10; ++i) {
        for (int j = 1; j <= 10; ++j) {
            const double omega_h = 0.2 * i;
            const double t_h = 0.2 * j;
            ++tried;
            const auto s = check_structure(omega_h, t_h);
            if (s.ok) {
                const double elapsed = seconds_since(start);
                return {elapsed < tol::kStructureSeconds,
                        fmt("first match omega_h = %.1f, T_h = %.1f after %d candidates: %s; %.1f s", omega_h, t_h,
                            tried, s.why.c_str(), elapsed)};
            }
        }
    }
    return {false, fmt("no scale in [0.2, 2]^2 shows heat pump -> heater -> engine (%d tried)", tried)};
}

Outcome determinism() {
    RunConfig c;
    c.omega_h = 1.0;
    c.omega_c = 0.5;
    c.T_h = 1.0;
    c.T_c = 0.2;
    c.t_h = TimeAxis{std::nullopt, Range{1.0, 120.0, 50}};
    c.t_c = TimeAxis{std::nullopt, Range{1.0, 120.0, 50}};
    c.workers = 1;
    const auto serial = sweep_csv(run_sweep(c));
    c.workers = 8;
    const bool identical = sweep_csv(run_sweep(c)) == serial;

    c.t_h = TimeAxis{std::nullopt, Range{1.0, 120.0, 100}};
    c.t_c = TimeAxis{std::nullopt, Range{1.0, 120.0, 100}};
    c.workers = 4;
    const auto start = std::chrono::steady_clock::now();
    const auto big = run_sweep(c);
    const double elapsed = seconds_since(start);
    return {identical && big.size() == 10000 && elapsed < tol::kSweepSeconds,
            fmt("50x50 CSV identical for 1 vs 8 workers: %s; 100x100 sweep %.2f s (< %.0f s)",
                identical ? "yes" : "no", elapsed, tol::kSweepSeconds)};
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"kernel oracle equivalence", kernel_oracle},
        {"trigamma correctness", trigamma_checks},
        {"TCL2 long-time thermalization", thermalization},
        {"limit-cycle oracle", limit_cycle_oracle},
        {"energy conservation", energy_conservation},
        {"work-extraction verifiers", work_extraction_checks},
        {"markovian reference", markov_reference},
        {"qualitative cycle structure", qualitative_structure},
        {"determinism and parallel safety", determinism},
    };
    int failures = 0;
    int n = 0;
    for (const auto& [name, run] : criteria) {
        ++n;
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::printf("[%s] %d. %s: %s\n", o.pass ? "PASS" : "FAIL", n, name, o.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
