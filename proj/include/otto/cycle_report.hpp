// cycle_report.hpp: value types describing one evaluated limit cycle.
#pragma once

#include <optional>
#include <string_view>

#include "otto/kernels.hpp"
#include "otto/limit_cycle.hpp"

namespace otto {

// Energy changes over one isochoric stroke. interaction = -(qubit + bath).
struct StrokeEnergetics {
    BathLabel label = BathLabel::Hot;
    double qubit = 0.0;        // Delta E_S
    double bath = 0.0;         // Delta E_B
    double interaction = 0.0;  // Delta E_I
};

enum class Mode { Engine, Heater, HeatPump, Other };

enum class Flow { EnergyDivision, ReverseEnergyFlow, NormalEnergyFlow, Undefined };

constexpr std::string_view to_string(Mode mode) noexcept {
    switch (mode) {
        case Mode::Engine: return "engine";
        case Mode::Heater: return "heater";
        case Mode::HeatPump: return "heat_pump";
        case Mode::Other: return "other";
    }
    return "other";
}

constexpr std::string_view to_string(Flow flow) noexcept {
    switch (flow) {
        case Flow::EnergyDivision: return "energy_division";
        case Flow::ReverseEnergyFlow: return "reverse_energy_flow";
        case Flow::NormalEnergyFlow: return "normal_energy_flow";
        case Flow::Undefined: return "undefined";
    }
    return "undefined";
}

struct Works {
    double adiabatic_hot = 0.0;   // (w_h - w_c) rho^h_11
    double adiabatic_cold = 0.0;  // (w_c - w_h) rho^c_11
    double detach_hot = 0.0;      // Delta E_I^h
    double detach_cold = 0.0;     // Delta E_I^c
    double total = 0.0;
};

struct CycleReport {
    double t_hot = 0.0;
    double t_cold = 0.0;
    LimitCycleState limit_cycle;
    StrokeEnergetics hot;
    StrokeEnergetics cold;
    Works works;
    std::optional<double> alpha_hot;
    std::optional<double> alpha_cold;
    std::optional<double> efficiency;
    std::optional<double> cop;
    Mode mode = Mode::Other;
    Flow flow_hot = Flow::Undefined;
    Flow flow_cold = Flow::Undefined;
};

}  // namespace otto
