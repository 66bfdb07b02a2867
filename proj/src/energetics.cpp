#include "otto/energetics.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "otto/cycle_analysis.hpp"
#include "otto/error.hpp"
#include "otto/special_functions.hpp"

namespace otto {

namespace {

std::size_t end_node(double t, double step) {
    return static_cast<std::size_t>(std::ceil(t / step - 1e-9));
}

// Cumulative Simpson over nodes 0 .. k, linearly interpolated at t in [tau_{k-1}, tau_k].
double prefix_at(const std::vector<double>& integrand, double step, double t) {
    const auto prefix = cumulative_simpson(integrand, step);
    const double x = t / step;
    const auto i = static_cast<std::size_t>(std::floor(x));
    if (i + 1 >= prefix.size()) return prefix.back();
    const double frac = x - static_cast<double>(i);
    return prefix[i] + frac * (prefix[i + 1] - prefix[i]);
}

std::size_t checked_end_node(const KernelGrid& grid, const TransitionTraces& traces, double t) {
    if (!(t >= 0.0)) throw Error(ErrorKind::Domain, "energetics: stroke time must be >= 0");
    const std::size_t k = end_node(t, grid.step());
    if (k >= grid.size() || k >= traces.from_ground.size() || k >= traces.from_excited.size()) {
        throw Error(ErrorKind::Domain, "energetics: traces do not cover [0, " + std::to_string(t) + "]");
    }
    return k;
}

}  // namespace

double qubit_energy_change(const LimitCycleState& lc, BathLabel label, double omega) {
    const double entering_excited = 1.0 - lc.entering(label);
    return omega * (lc.after_excited(label) - entering_excited);
}

double energy_flow_integral(const KernelGrid& grid, const TransitionTraces& traces,
                            double entering_ground, double t) {
    const std::size_t k = checked_end_node(grid, traces, t);
    const double w = grid.qubit_frequency();
    const auto& d1 = grid.noise();
    const auto& d2 = grid.dissipation();
    std::vector<double> integrand(k + 1);
    for (std::size_t i = 0; i <= k; ++i) {
        const double tau = grid.tau(i);
        const double rho = entering_ground * traces.from_ground[i] + (1.0 - entering_ground) * traces.from_excited[i];
        integrand[i] = (2.0 * rho - 1.0) * d1[i] * std::sin(w * tau) + d2[i] * std::cos(w * tau);
    }
    return prefix_at(integrand, grid.step(), t);
}

double bath_energy_change(const LimitCycleState& lc, BathLabel label, double omega, const KernelGrid& grid,
                          const TransitionTraces& traces, double t) {
    return -qubit_energy_change(lc, label, omega) + energy_flow_integral(grid, traces, lc.entering(label), t);
}

double interaction_energy_change(double qubit_change, double bath_change) {
    return -qubit_change - bath_change;
}

double interaction_energy_direct(const LimitCycleState& lc, BathLabel label, const KernelGrid& grid,
                                 const TransitionTraces& traces, double t) {
    const std::size_t k = checked_end_node(grid, traces, t);
    const double w = grid.qubit_frequency();
    std::vector<double> proportional(k + 1), offset(k + 1);
    for (std::size_t i = 0; i <= k; ++i) {
        const double tau = grid.tau(i);
        const double noise_sin = grid.noise()[i] * std::sin(w * tau);
        proportional[i] = 2.0 * (traces.from_ground[i] - traces.from_excited[i]) * noise_sin;
        offset[i] = (2.0 * traces.from_excited[i] - 1.0) * noise_sin + grid.dissipation()[i] * std::cos(w * tau);
    }
    const double p = lc.entering(label);
    return -(p * prefix_at(proportional, grid.step(), t) + prefix_at(offset, grid.step(), t));
}

StrokeEnergetics stroke_energetics(const LimitCycleState& lc, BathLabel label, const KernelGrid& grid,
                                   const TransitionTraces& traces, double t) {
    StrokeEnergetics e;
    e.label = label;
    e.qubit = qubit_energy_change(lc, label, grid.qubit_frequency());
    e.bath = -e.qubit + energy_flow_integral(grid, traces, lc.entering(label), t);
    e.interaction = interaction_energy_change(e.qubit, e.bath);
    return e;
}

double markov_population(double initial_ground, const BathSpec& bath, double omega, double t) {
    if (!(t >= 0.0)) throw Error(ErrorKind::Domain, "markov_population: t must be >= 0");
    const double stationary = thermal_ground_population(omega, bath.temperature);
    return stationary + (initial_ground - stationary) * std::exp(-markov_relaxation_rate(omega, bath) * t);
}

StrokeMap markov_stroke_map(const BathSpec& bath, double omega, double t) {
    return {markov_population(1.0, bath, omega, t), markov_population(0.0, bath, omega, t)};
}

CycleReport markov_cycle(double t_hot, double t_cold, const BathSpec& hot, const BathSpec& cold,
                         double omega_hot, double omega_cold) {
    if (!(t_hot > 0.0) || !(t_cold > 0.0)) {
        throw Error(ErrorKind::Domain, "markov_cycle: stroke durations must be strictly positive");
    }
    const auto lc = fixed_point(markov_stroke_map(hot, omega_hot, t_hot), markov_stroke_map(cold, omega_cold, t_cold));
    auto stroke = [&](BathLabel label, double omega) {
        StrokeEnergetics e;
        e.label = label;
        e.qubit = qubit_energy_change(lc, label, omega);
        e.bath = -e.qubit;
        e.interaction = 0.0;
        return e;
    };
    return assemble_report(t_hot, t_cold, lc, stroke(BathLabel::Hot, omega_hot), stroke(BathLabel::Cold, omega_cold),
                           omega_hot, omega_cold);
}

}  // namespace otto
