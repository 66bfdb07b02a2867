// limit_cycle.hpp: asymptotic occupation of the repeated four-stroke cycle.
#pragma once

#include "otto/kernels.hpp"
#include "otto/tcl_dynamics.hpp"

namespace otto {

// One isochoric stroke reduced to its action on the ground population: a qubit entering
// with ground probability P leaves with P * from_ground + (1 - P) * from_excited.
struct StrokeMap {
    double from_ground = 1.0;   // rho_{0,00}(t)
    double from_excited = 0.0;  // rho_{1,00}(t)

    double apply(double entering_ground) const {
        return entering_ground * from_ground + (1.0 - entering_ground) * from_excited;
    }
};

StrokeMap stroke_map(const TransitionTraces& traces);

struct LimitCycleState {
    double entering_hot = 0.0;   // P^h
    double entering_cold = 0.0;  // P^c
    double p0 = 0.0;
    double p_hot = 0.0;
    double p_cold = 0.0;
    double hot_ground = 0.0;     // rho^h_00 after the hot stroke
    double hot_excited = 0.0;    // rho^h_11
    double cold_ground = 0.0;    // rho^c_00 after the cold stroke
    double cold_excited = 0.0;   // rho^c_11

    double entering(BathLabel label) const { return label == BathLabel::Hot ? entering_hot : entering_cold; }
    double after_excited(BathLabel label) const { return label == BathLabel::Hot ? hot_excited : cold_excited; }
};

constexpr double kSingularMapTolerance = 1e-12;

// Closed-form fixed point P^mu = p^mu / (1 - p0). Error{SingularMap} if |1 - p0| < 1e-12.
LimitCycleState fixed_point(const StrokeMap& hot, const StrokeMap& cold);

// Fixed point plus the transition traces on [0, t^mu] that the energetics integrate over.
struct LimitCycle {
    LimitCycleState state;
    TransitionTraces hot;
    TransitionTraces cold;
};

// Error{Domain} unless t_hot > 0 and t_cold > 0.
LimitCycle fixed_point(double t_hot, double t_cold, const KernelGrid& hot_grid, const KernelGrid& cold_grid);

// P^h after `cycles` applications of the hot-then-cold map, starting from P^h_0.
double iterate_map(double initial_entering_hot, long cycles, const StrokeMap& hot, const StrokeMap& cold);

}  // namespace otto
