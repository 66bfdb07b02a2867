// sweep.hpp: single-cycle, (t_h, t_c) sweep and phase-diagram runs with CSV output.
#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "otto/cycle_analysis.hpp"
#include "otto/run_config.hpp"

namespace otto {

inline constexpr std::string_view kSweepCsvHeader =
    "t_h,t_c,dE_S_h,dE_B_h,dE_I_h,dE_S_c,dE_B_c,dE_I_c,W_adiab_h,W_adiab_c,W_detach_h,W_detach_c,W_total,"
    "alpha_h,alpha_c,eta,cop,mode,flow_h,flow_c,error";

inline constexpr std::string_view kPhaseCsvHeader =
    "ratio_T,ratio_omega,n_cells,n_engine,n_heater,n_heat_pump,n_other,n_error,label";

struct SweepRow {
    double t_hot = 0.0;
    double t_cold = 0.0;
    std::optional<CycleReport> report;
    std::string error;  // empty when report is present
};

// Rows in row-major order: t_h outer, t_c inner.
using SweepTable = std::vector<SweepRow>;

// Runs fn(i) for i in [0, count) on `workers` threads, static interleaved partition.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

CycleReport run_cycle(const RunConfig& config);

// Per-cell numeric failures land in the error column; model construction failures throw.
SweepTable run_sweep(const RunConfig& config);

// Same, on a prebuilt model (grids shared by the caller).
SweepTable run_sweep(const CycleModel& model, const std::vector<double>& t_hot, const std::vector<double>& t_cold,
                     int workers);

struct PhaseCell {
    double ratio_T = 0.0;
    double ratio_omega = 0.0;
    int n_engine = 0;
    int n_heater = 0;
    int n_heat_pump = 0;
    int n_other = 0;
    int n_error = 0;
    std::string error;  // set when the cell's model could not be built
    SweepTable rows;

    int n_cells() const { return n_engine + n_heater + n_heat_pump + n_other + n_error; }
    // "engine_only", "mixed" (engine and other modes), "no_engine", or "error".
    std::string label() const;
};

struct PhaseDiagram {
    std::vector<double> ratio_T;
    std::vector<double> ratio_omega;
    std::vector<PhaseCell> cells;  // ratio_T outer, ratio_omega inner
};

PhaseDiagram run_phase(const RunConfig& config);

// "%.17g"; empty for absent values.
std::string format_real(double value);
std::string format_real(const std::optional<double>& value);

void write_sweep_csv(std::ostream& out, const SweepTable& table);
void write_phase_csv(std::ostream& out, const PhaseDiagram& diagram);
void write_kernel_csv(std::ostream& out, const KernelGrid& grid);
void write_trace_csv(std::ostream& out, const PopulationTrace& trace);

std::string report_to_json(const CycleReport& report);

}  // namespace otto
