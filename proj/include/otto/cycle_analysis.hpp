// cycle_analysis.hpp: works, performance, operating mode and flow classification of a cycle.
#pragma once

#include <functional>
#include <optional>

#include "otto/cycle_report.hpp"
#include "otto/kernels.hpp"
#include "otto/limit_cycle.hpp"
#include "otto/tcl_dynamics.hpp"

namespace otto {

// Magnitudes below this are treated as sign-indefinite.
constexpr double kDegenerateSign = 1e-12;

// Positive work flows out of the qubit. W_detach^mu = Delta E_I^mu.
Works works(const LimitCycleState& lc, const StrokeEnergetics& hot, const StrokeEnergetics& cold,
            double omega_hot, double omega_cold);

// Engine: W > 0. HeatPump: W < 0 and Delta E_S^c > 0. Heater: W < 0, Delta E_S^h > 0 and
// Delta E_S^c < 0. Anything else, including sign-indefinite inputs, is Other.
Mode classify_mode(double total_work, double qubit_hot, double qubit_cold);

// Sign table of (Delta E_S, Delta E_B) per bath:
//   hot:  (+,+) division, (+,-) normal,  (-,+) reverse
//   cold: (+,+) division, (-,+) normal,  (+,-) reverse (not expected to occur)
// (-,-) or a sign within kDegenerateSign of zero gives Undefined.
Flow classify_flow(double qubit_change, double bath_change, BathLabel label);

// True for the (-,-) cell, which would mean a positive interaction-energy change.
bool is_forbidden_flow_cell(double qubit_change, double bath_change);

struct NonMarkovIndex {
    std::optional<double> cold;  // |Delta E_I^c / Delta E_B^c|
    std::optional<double> hot;   // |Delta E_I^h / Delta E_S^c|
};

NonMarkovIndex nonmarkov_index(double interaction_cold, double bath_cold, double interaction_hot, double qubit_cold);

struct Performance {
    std::optional<double> efficiency;  // W / Delta E_S^h, engines only
    std::optional<double> cop;         // |Delta E_S^c| / |W|
};

Performance performance(Mode mode, double total_work, double qubit_hot, double qubit_cold);

double carnot_efficiency(double t_cold, double t_hot);

CycleReport assemble_report(double t_hot, double t_cold, const LimitCycleState& lc, const StrokeEnergetics& hot,
                            const StrokeEnergetics& cold, double omega_hot, double omega_cold);

enum class Dynamics { Tcl2, Markov };

struct CycleParameters {
    BathSpec hot{BathLabel::Hot, 0.01, 0.4, 1.0};
    BathSpec cold{BathLabel::Cold, 0.01, 0.4, 0.2};
    double omega_hot = 1.0;
    double omega_cold = 0.5;
};

// Evaluates cycle reports at arbitrary (t_hot, t_cold) inside a fixed time box. Kernel grids
// and full-length transition traces are built once at construction and shared read-only,
// so evaluate() may be called concurrently.
class CycleModel {
public:
    // step: grid step override; the per-bath default step otherwise.
    CycleModel(const CycleParameters& params, Dynamics dynamics, double t_hot_max, double t_cold_max,
               std::optional<double> step = std::nullopt);

    CycleReport evaluate(double t_hot, double t_cold) const;

    const CycleParameters& parameters() const noexcept { return params_; }
    Dynamics dynamics() const noexcept { return dynamics_; }
    const KernelGrid& hot_grid() const { return *hot_grid_; }
    const KernelGrid& cold_grid() const { return *cold_grid_; }
    const TransitionTraces& hot_traces() const { return *hot_traces_; }
    const TransitionTraces& cold_traces() const { return *cold_traces_; }

private:
    CycleParameters params_;
    Dynamics dynamics_;
    double t_hot_max_;
    double t_cold_max_;
    std::optional<KernelGrid> hot_grid_;
    std::optional<KernelGrid> cold_grid_;
    std::optional<TransitionTraces> hot_traces_;
    std::optional<TransitionTraces> cold_traces_;
};

struct BoundaryTimes {
    std::optional<double> t0;             // common zero of Delta E_S^h and Delta E_S^c (mean of the two)
    std::optional<double> t0_hot_qubit;   // zero of Delta E_S^h
    std::optional<double> t0_cold_qubit;  // zero of Delta E_S^c
    std::optional<double> t1;             // zero of W
};

constexpr double kBoundaryRelativeTolerance = 1e-6;

using ColdStrokeEvaluator = std::function<CycleReport(double t_cold)>;

// Scans t_cold on [t_min, t_max] with the given step, brackets the first sign change of
// each quantity, then bisects with fresh evaluations to kBoundaryRelativeTolerance.
// Quantities without a sign change in range are left absent.
BoundaryTimes find_boundaries(const ColdStrokeEvaluator& evaluate, double t_min, double t_max, double step);

}  // namespace otto
