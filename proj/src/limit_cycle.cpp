#include "otto/limit_cycle.hpp"

#include <cmath>
#include <string>

#include "otto/error.hpp"

namespace otto {

StrokeMap stroke_map(const TransitionTraces& traces) {
    return {traces.from_ground.final_value(), traces.from_excited.final_value()};
}

LimitCycleState fixed_point(const StrokeMap& hot, const StrokeMap& cold) {
    LimitCycleState s;
    s.p0 = (cold.from_ground - cold.from_excited) * (hot.from_ground - hot.from_excited);
    s.p_hot = cold.from_ground * hot.from_excited + cold.from_excited * (1.0 - hot.from_excited);
    s.p_cold = hot.from_ground * cold.from_excited + hot.from_excited * (1.0 - cold.from_excited);
    const double denom = 1.0 - s.p0;
    if (std::abs(denom) < kSingularMapTolerance) {
        throw Error(ErrorKind::SingularMap,
                    "fixed_point: 1 - p0 = " + std::to_string(denom) + "; the cycle map has no unique fixed point");
    }
    s.entering_hot = s.p_hot / denom;
    s.entering_cold = s.p_cold / denom;
    s.hot_ground = hot.apply(s.entering_hot);
    s.hot_excited = 1.0 - s.hot_ground;
    s.cold_ground = cold.apply(s.entering_cold);
    s.cold_excited = 1.0 - s.cold_ground;
    return s;
}

LimitCycle fixed_point(double t_hot, double t_cold, const KernelGrid& hot_grid, const KernelGrid& cold_grid) {
    if (!(t_hot > 0.0) || !(t_cold > 0.0)) {
        throw Error(ErrorKind::Domain, "fixed_point: stroke durations must be strictly positive");
    }
    auto hot = transition_populations(hot_grid, t_hot);
    auto cold = transition_populations(cold_grid, t_cold);
    auto state = fixed_point(stroke_map(hot), stroke_map(cold));
    return {state, std::move(hot), std::move(cold)};
}

double iterate_map(double initial_entering_hot, long cycles, const StrokeMap& hot, const StrokeMap& cold) {
    double p = initial_entering_hot;
    for (long n = 0; n < cycles; ++n) p = cold.apply(hot.apply(p));
    return p;
}

}  // namespace otto
