#include "otto/sweep.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <thread>

#include "json.hpp"
#include "otto/error.hpp"

namespace otto {

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

}  // namespace

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
    const auto n_threads = static_cast<std::size_t>(std::max(1, workers));
    if (n_threads == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> failures(n_threads);
    for (std::size_t w = 0; w < std::min(n_threads, count); ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += n_threads) fn(i);
            } catch (...) {
                failures[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& f : failures) {
        if (f) std::rethrow_exception(f);
    }
}

CycleReport run_cycle(const RunConfig& config) {
    validate_for(config, Command::Cycle);
    const double t_h = *config.t_h->value;
    const double t_c = *config.t_c->value;
    const CycleModel model(cycle_parameters(config), config.dynamics, t_h, t_c, config.grid_step);
    return model.evaluate(t_h, t_c);
}

SweepTable run_sweep(const CycleModel& model, const std::vector<double>& t_hot, const std::vector<double>& t_cold,
                     int workers) {
    SweepTable table(t_hot.size() * t_cold.size());
    parallel_for(table.size(), workers, [&](std::size_t i) {
        SweepRow& row = table[i];
        row.t_hot = t_hot[i / t_cold.size()];
        row.t_cold = t_cold[i % t_cold.size()];
        try {
            row.report = model.evaluate(row.t_hot, row.t_cold);
        } catch (const Error& e) {
            row.error = std::string(to_string(e.kind())) + ": " + e.what();
        }
    });
    return table;
}

SweepTable run_sweep(const RunConfig& config) {
    validate_for(config, Command::Sweep);
    const CycleModel model(cycle_parameters(config), config.dynamics, config.t_h->max(), config.t_c->max(),
                           config.grid_step);
    return run_sweep(model, config.t_h->values(), config.t_c->values(), config.workers);
}

std::string PhaseCell::label() const {
    if (!error.empty() || n_error == n_cells()) return "error";
    if (n_engine == 0) return "no_engine";
    if (n_heater + n_heat_pump + n_other == 0) return "engine_only";
    return "mixed";
}

PhaseDiagram run_phase(const RunConfig& config) {
    validate_for(config, Command::Phase);
    PhaseDiagram diagram;
    diagram.ratio_T = config.ratio_T->values();
    diagram.ratio_omega = config.ratio_omega->values();
    diagram.cells.resize(diagram.ratio_T.size() * diagram.ratio_omega.size());
    const auto t_hot = config.t_h->values();
    const auto t_cold = config.t_c->values();

    parallel_for(diagram.cells.size(), config.workers, [&](std::size_t i) {
        PhaseCell& cell = diagram.cells[i];
        cell.ratio_T = diagram.ratio_T[i / diagram.ratio_omega.size()];
        cell.ratio_omega = diagram.ratio_omega[i % diagram.ratio_omega.size()];
        try {
            const CycleModel model(cycle_parameters(config, cell.ratio_T, cell.ratio_omega), config.dynamics,
                                   config.t_h->max(), config.t_c->max(), config.grid_step);
            cell.rows = run_sweep(model, t_hot, t_cold, 1);
        } catch (const Error& e) {
            cell.error = std::string(to_string(e.kind())) + ": " + e.what();
            cell.n_error = static_cast<int>(t_hot.size() * t_cold.size());
            return;
        }
        for (const auto& row : cell.rows) {
            if (!row.report) {
                ++cell.n_error;
                continue;
            }
            switch (row.report->mode) {
                case Mode::Engine: ++cell.n_engine; break;
                case Mode::Heater: ++cell.n_heater; break;
                case Mode::HeatPump: ++cell.n_heat_pump; break;
                case Mode::Other: ++cell.n_other; break;
            }
        }
    });
    return diagram;
}

std::string format_real(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string format_real(const std::optional<double>& value) { return value ? format_real(*value) : std::string(); }

void write_sweep_csv(std::ostream& out, const SweepTable& table) {
    out << kSweepCsvHeader << '\n';
    for (const auto& row : table) {
        out << format_real(row.t_hot) << ',' << format_real(row.t_cold);
        if (row.report) {
            const auto& r = *row.report;
            for (double v : {r.hot.qubit, r.hot.bath, r.hot.interaction, r.cold.qubit, r.cold.bath, r.cold.interaction,
                             r.works.adiabatic_hot, r.works.adiabatic_cold, r.works.detach_hot, r.works.detach_cold,
                             r.works.total}) {
                out << ',' << format_real(v);
            }
            for (const auto* v : {&r.alpha_hot, &r.alpha_cold, &r.efficiency, &r.cop}) {
                out << ',' << format_real(*v);
            }
            out << ',' << to_string(r.mode) << ',' << to_string(r.flow_hot) << ',' << to_string(r.flow_cold) << ",\n";
        } else {
            out << std::string(19, ',') << csv_escape(row.error) << '\n';
        }
    }
}

void write_phase_csv(std::ostream& out, const PhaseDiagram& diagram) {
    out << kPhaseCsvHeader << '\n';
    for (const auto& c : diagram.cells) {
        out << format_real(c.ratio_T) << ',' << format_real(c.ratio_omega) << ',' << c.n_cells() << ',' << c.n_engine
            << ',' << c.n_heater << ',' << c.n_heat_pump << ',' << c.n_other << ',' << c.n_error << ',' << c.label()
            << '\n';
    }
}

void write_kernel_csv(std::ostream& out, const KernelGrid& grid) {
    out << "tau,D1,D2,a,b,A\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out << format_real(grid.tau(i)) << ',' << format_real(grid.noise()[i]) << ',' << format_real(grid.dissipation()[i])
            << ',' << format_real(grid.a()[i]) << ',' << format_real(grid.b()[i]) << ','
            << format_real(grid.a_integral()[i]) << '\n';
    }
}

void write_trace_csv(std::ostream& out, const PopulationTrace& trace) {
    out << "tau,rho00\n";
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const double tau = std::min(trace.step() * static_cast<double>(i), trace.end_time());
        out << format_real(tau) << ',' << format_real(trace.at(tau)) << '\n';
    }
}

std::string report_to_json(const CycleReport& r) {
    using nlohmann::json;
    auto optional_json = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
    auto stroke_json = [](const StrokeEnergetics& e) {
        return json{{"dE_S", e.qubit}, {"dE_B", e.bath}, {"dE_I", e.interaction}};
    };
    json j;
    j["t_h"] = r.t_hot;
    j["t_c"] = r.t_cold;
    j["hot"] = stroke_json(r.hot);
    j["cold"] = stroke_json(r.cold);
    j["limit_cycle"] = {{"P_h", r.limit_cycle.entering_hot},     {"P_c", r.limit_cycle.entering_cold},
                        {"p0", r.limit_cycle.p0},                {"rho_h_11", r.limit_cycle.hot_excited},
                        {"rho_c_11", r.limit_cycle.cold_excited}};
    j["works"] = {{"W_adiab_h", r.works.adiabatic_hot}, {"W_adiab_c", r.works.adiabatic_cold},
                  {"W_detach_h", r.works.detach_hot},   {"W_detach_c", r.works.detach_cold},
                  {"W_total", r.works.total}};
    j["alpha_h"] = optional_json(r.alpha_hot);
    j["alpha_c"] = optional_json(r.alpha_cold);
    j["eta"] = optional_json(r.efficiency);
    j["cop"] = optional_json(r.cop);
    j["mode"] = std::string(to_string(r.mode));
    j["flow_h"] = std::string(to_string(r.flow_hot));
    j["flow_c"] = std::string(to_string(r.flow_cold));
    return j.dump(2);
}

}  // namespace otto
