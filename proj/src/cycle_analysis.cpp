#include "otto/cycle_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "otto/energetics.hpp"
#include "otto/error.hpp"

namespace otto {

namespace {

int sign_of(double x) {
    if (x > kDegenerateSign) return 1;
    if (x < -kDegenerateSign) return -1;
    return 0;
}

}  // namespace

Works works(const LimitCycleState& lc, const StrokeEnergetics& hot, const StrokeEnergetics& cold,
            double omega_hot, double omega_cold) {
    Works w;
    w.adiabatic_hot = (omega_hot - omega_cold) * lc.hot_excited;
    w.adiabatic_cold = (omega_cold - omega_hot) * lc.cold_excited;
    w.detach_hot = hot.interaction;
    w.detach_cold = cold.interaction;
    w.total = w.adiabatic_hot + w.adiabatic_cold + w.detach_hot + w.detach_cold;
    return w;
}

Mode classify_mode(double total_work, double qubit_hot, double qubit_cold) {
    const int w = sign_of(total_work);
    const int h = sign_of(qubit_hot);
    const int c = sign_of(qubit_cold);
    if (w > 0) return Mode::Engine;
    if (w < 0 && c > 0) return Mode::HeatPump;
    if (w < 0 && h > 0 && c < 0) return Mode::Heater;
    return Mode::Other;
}

Flow classify_flow(double qubit_change, double bath_change, BathLabel label) {
    const int s = sign_of(qubit_change);
    const int b = sign_of(bath_change);
    if (s == 0 || b == 0) return Flow::Undefined;
    if (s > 0 && b > 0) return Flow::EnergyDivision;
    if (s < 0 && b < 0) return Flow::Undefined;
    if (label == BathLabel::Hot) return s > 0 ? Flow::NormalEnergyFlow : Flow::ReverseEnergyFlow;
    return s < 0 ? Flow::NormalEnergyFlow : Flow::ReverseEnergyFlow;
}

bool is_forbidden_flow_cell(double qubit_change, double bath_change) {
    return sign_of(qubit_change) < 0 && sign_of(bath_change) < 0;
}

NonMarkovIndex nonmarkov_index(double interaction_cold, double bath_cold, double interaction_hot, double qubit_cold) {
    NonMarkovIndex idx;
    if (bath_cold != 0.0) idx.cold = std::abs(interaction_cold / bath_cold);
    if (qubit_cold != 0.0) idx.hot = std::abs(interaction_hot / qubit_cold);
    return idx;
}

Performance performance(Mode mode, double total_work, double qubit_hot, double qubit_cold) {
    Performance p;
    if (mode == Mode::Engine && sign_of(qubit_hot) > 0) p.efficiency = total_work / qubit_hot;
    if (total_work != 0.0) p.cop = std::abs(qubit_cold) / std::abs(total_work);
    return p;
}

double carnot_efficiency(double t_cold, double t_hot) { return 1.0 - t_cold / t_hot; }

CycleReport assemble_report(double t_hot, double t_cold, const LimitCycleState& lc, const StrokeEnergetics& hot,
                            const StrokeEnergetics& cold, double omega_hot, double omega_cold) {
    CycleReport r;
    r.t_hot = t_hot;
    r.t_cold = t_cold;
    r.limit_cycle = lc;
    r.hot = hot;
    r.cold = cold;
    r.works = works(lc, hot, cold, omega_hot, omega_cold);
    const auto idx = nonmarkov_index(cold.interaction, cold.bath, hot.interaction, cold.qubit);
    r.alpha_cold = idx.cold;
    r.alpha_hot = idx.hot;
    r.mode = classify_mode(r.works.total, hot.qubit, cold.qubit);
    const auto perf = performance(r.mode, r.works.total, hot.qubit, cold.qubit);
    r.efficiency = perf.efficiency;
    r.cop = perf.cop;
    r.flow_hot = classify_flow(hot.qubit, hot.bath, BathLabel::Hot);
    r.flow_cold = classify_flow(cold.qubit, cold.bath, BathLabel::Cold);
    return r;
}

CycleModel::CycleModel(const CycleParameters& params, Dynamics dynamics, double t_hot_max, double t_cold_max,
                       std::optional<double> step)
    : params_(params), dynamics_(dynamics), t_hot_max_(t_hot_max), t_cold_max_(t_cold_max) {
    params_.hot.label = BathLabel::Hot;
    params_.cold.label = BathLabel::Cold;
    params_.hot.validate();
    params_.cold.validate();
    if (!(params_.omega_hot > 0.0) || !(params_.omega_cold > 0.0)) {
        throw Error(ErrorKind::Domain, "CycleModel: qubit frequencies must be positive");
    }
    if (!(t_hot_max > 0.0) || !(t_cold_max > 0.0)) {
        throw Error(ErrorKind::Domain, "CycleModel: time box must be positive");
    }
    if (dynamics_ == Dynamics::Markov) return;
    auto build = [&](const BathSpec& bath, double omega, double t_max) {
        return step ? build_kernel_grid(bath, omega, t_max, *step) : build_kernel_grid(bath, omega, t_max);
    };
    hot_grid_.emplace(build(params_.hot, params_.omega_hot, t_hot_max));
    cold_grid_.emplace(build(params_.cold, params_.omega_cold, t_cold_max));
    hot_traces_.emplace(transition_populations(*hot_grid_, hot_grid_->t_max()));
    cold_traces_.emplace(transition_populations(*cold_grid_, cold_grid_->t_max()));
}

CycleReport CycleModel::evaluate(double t_hot, double t_cold) const {
    if (!(t_hot > 0.0) || !(t_cold > 0.0)) {
        throw Error(ErrorKind::Domain, "evaluate: stroke durations must be strictly positive");
    }
    if (t_hot > t_hot_max_ * (1.0 + 1e-12) || t_cold > t_cold_max_ * (1.0 + 1e-12)) {
        throw Error(ErrorKind::Domain, "evaluate: (" + std::to_string(t_hot) + ", " + std::to_string(t_cold) +
                                           ") outside the model's time box");
    }
    if (dynamics_ == Dynamics::Markov) {
        return markov_cycle(t_hot, t_cold, params_.hot, params_.cold, params_.omega_hot, params_.omega_cold);
    }
    const StrokeMap hot_map{hot_traces_->from_ground.at(t_hot), hot_traces_->from_excited.at(t_hot)};
    const StrokeMap cold_map{cold_traces_->from_ground.at(t_cold), cold_traces_->from_excited.at(t_cold)};
    const auto lc = fixed_point(hot_map, cold_map);
    const auto hot = stroke_energetics(lc, BathLabel::Hot, *hot_grid_, *hot_traces_, t_hot);
    const auto cold = stroke_energetics(lc, BathLabel::Cold, *cold_grid_, *cold_traces_, t_cold);
    return assemble_report(t_hot, t_cold, lc, hot, cold, params_.omega_hot, params_.omega_cold);
}

BoundaryTimes find_boundaries(const ColdStrokeEvaluator& evaluate, double t_min, double t_max, double step) {
    if (!(t_min > 0.0) || !(t_max > t_min) || !(step > 0.0)) {
        throw Error(ErrorKind::Domain, "find_boundaries: need 0 < t_min < t_max and step > 0");
    }
    using Quantity = double (*)(const CycleReport&);
    const Quantity hot_qubit = [](const CycleReport& r) { return r.hot.qubit; };
    const Quantity cold_qubit = [](const CycleReport& r) { return r.cold.qubit; };
    const Quantity total_work = [](const CycleReport& r) { return r.works.total; };

    std::vector<double> times;
    for (double t = t_min; t <= t_max * (1.0 + 1e-12); t = t_min + step * static_cast<double>(times.size())) {
        times.push_back(t);
    }
    std::vector<CycleReport> scan;
    scan.reserve(times.size());
    for (double t : times) scan.push_back(evaluate(t));

    auto root = [&](Quantity q) -> std::optional<double> {
        for (std::size_t i = 0; i + 1 < scan.size(); ++i) {
            const double fa = q(scan[i]);
            const double fb = q(scan[i + 1]);
            if (fa == 0.0) return times[i];
            if ((fa < 0.0) == (fb < 0.0) && fb != 0.0) continue;
            double lo = times[i], hi = times[i + 1];
            double flo = fa;
            while (hi - lo > kBoundaryRelativeTolerance * 0.5 * (lo + hi)) {
                const double mid = 0.5 * (lo + hi);
                const double fm = q(evaluate(mid));
                if (fm == 0.0) return mid;
                if ((fm < 0.0) == (flo < 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            return 0.5 * (lo + hi);
        }
        return std::nullopt;
    };

    BoundaryTimes b;
    b.t0_hot_qubit = root(hot_qubit);
    b.t0_cold_qubit = root(cold_qubit);
    if (b.t0_hot_qubit && b.t0_cold_qubit) b.t0 = 0.5 * (*b.t0_hot_qubit + *b.t0_cold_qubit);
    b.t1 = root(total_work);
    return b;
}

}  // namespace otto
