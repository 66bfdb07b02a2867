// energetics.hpp: per-stroke energy changes of qubit, bath and interaction.
#pragma once

#include "otto/cycle_report.hpp"
#include "otto/kernels.hpp"
#include "otto/limit_cycle.hpp"
#include "otto/tcl_dynamics.hpp"

namespace otto {

// w^mu (rho^mu_11 after the stroke - rho^mu_11 entering it), entering taken at the limit cycle.
double qubit_energy_change(const LimitCycleState& lc, BathLabel label, double omega);

// int_0^t { (2 rho00(tau) - 1) D1(tau) sin(w tau) + D2(tau) cos(w tau) } dtau with
// rho00 = P rho_{0,00} + (1 - P) rho_{1,00}, P the ground population entering the stroke.
// Cumulative Simpson over the grid nodes, linearly interpolated at t. The traces must
// cover [0, t].
double energy_flow_integral(const KernelGrid& grid, const TransitionTraces& traces,
                            double entering_ground, double t);

// Delta E_B = -Delta E_S + energy_flow_integral.
double bath_energy_change(const LimitCycleState& lc, BathLabel label, double omega, const KernelGrid& grid,
                          const TransitionTraces& traces, double t);

// Delta E_I = -Delta E_S - Delta E_B.
double interaction_energy_change(double qubit_change, double bath_change);

// Delta E_I evaluated directly as -int_0^t {...} dtau by splitting the integrand into
// P-proportional and P-free parts, each integrated from the transition traces alone.
// Independent of the bath_energy_change path; used as its cross-check.
double interaction_energy_direct(const LimitCycleState& lc, BathLabel label, const KernelGrid& grid,
                                 const TransitionTraces& traces, double t);

StrokeEnergetics stroke_energetics(const LimitCycleState& lc, BathLabel label, const KernelGrid& grid,
                                   const TransitionTraces& traces, double t);

// Born-Markov (GKSL) population:
// rho_ss + (rho00(0) - rho_ss) exp(-2 pi J(w) (1 + 2 n(w)) t), rho_ss = (1 + n) / (1 + 2 n).
double markov_population(double initial_ground, const BathSpec& bath, double omega, double t);

StrokeMap markov_stroke_map(const BathSpec& bath, double omega, double t);

// Markovian limit cycle: Delta E_B = -Delta E_S, Delta E_I = 0, no detachment work.
CycleReport markov_cycle(double t_hot, double t_cold, const BathSpec& hot, const BathSpec& cold,
                         double omega_hot, double omega_cold);

}  // namespace otto
