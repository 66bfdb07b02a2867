#include "otto/run_config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "otto/error.hpp"

namespace otto {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& message) {
    throw Error(ErrorKind::Config, "field '" + field + "': " + message);
}

double number(const json& j, const std::string& field) {
    if (!j.is_number()) fail(field, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(field, "must be finite");
    return v;
}

double positive(const json& j, const std::string& field) {
    const double v = number(j, field);
    if (!(v > 0.0)) fail(field, "must be positive");
    return v;
}

int integer(const json& j, const std::string& field) {
    if (!j.is_number_integer()) fail(field, "expected an integer");
    return j.get<int>();
}

void reject_unknown(const json& j, const std::set<std::string>& known, const std::string& prefix) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!known.contains(key)) fail(prefix + key, "unknown key");
    }
}

Range parse_range(const json& j, const std::string& field) {
    if (!j.is_object()) fail(field, "expected an object {min, max, n}");
    reject_unknown(j, {"min", "max", "n"}, field + ".");
    for (const char* key : {"min", "max", "n"}) {
        if (!j.contains(key)) fail(field + "." + key, "missing");
    }
    Range r;
    r.min = number(j["min"], field + ".min");
    r.max = number(j["max"], field + ".max");
    r.n = integer(j["n"], field + ".n");
    if (r.n < 1) fail(field + ".n", "must be >= 1");
    if (r.max < r.min) fail(field, "max must be >= min");
    if (r.n > 1 && r.max == r.min) fail(field, "n > 1 requires max > min");
    return r;
}

TimeAxis parse_axis(const json& j, const std::string& field) {
    TimeAxis a;
    if (j.is_number()) {
        a.value = positive(j, field);
    } else {
        a.range = parse_range(j, field);
        if (!(a.range->min > 0.0)) fail(field + ".min", "stroke times must be positive");
    }
    return a;
}

json range_json(const Range& r) { return json{{"min", r.min}, {"max", r.max}, {"n", r.n}}; }

json axis_json(const TimeAxis& a) { return a.is_scalar() ? json(*a.value) : range_json(*a.range); }

}  // namespace

std::vector<double> Range::values() const {
    if (n == 1) return {min};
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = min + (max - min) * i / (n - 1);
    out.back() = max;
    return out;
}

std::vector<double> TimeAxis::values() const { return value ? std::vector<double>{*value} : range->values(); }

double TimeAxis::max() const { return value ? *value : range->max; }

Dynamics parse_dynamics(const std::string& name) {
    if (name == "tcl2") return Dynamics::Tcl2;
    if (name == "markov") return Dynamics::Markov;
    fail("dynamics", "expected \"tcl2\" or \"markov\", got \"" + name + "\"");
}

RunConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Config, std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw Error(ErrorKind::Config, "config must be a JSON object");
    reject_unknown(j,
                   {"omega_h", "omega_c", "T_h", "T_c", "lambda_h", "lambda_c", "cutoff_h", "cutoff_c", "t_h",
                    "t_c", "ratio_T", "ratio_omega", "grid_step", "output", "dynamics", "workers"},
                   "");
    RunConfig c;
    if (!j.contains("omega_h")) fail("omega_h", "missing");
    if (!j.contains("T_h")) fail("T_h", "missing");
    c.omega_h = positive(j["omega_h"], "omega_h");
    c.T_h = positive(j["T_h"], "T_h");
    if (j.contains("omega_c")) c.omega_c = positive(j["omega_c"], "omega_c");
    if (j.contains("T_c")) c.T_c = positive(j["T_c"], "T_c");
    if (j.contains("lambda_h")) c.lambda_h = positive(j["lambda_h"], "lambda_h");
    if (j.contains("lambda_c")) c.lambda_c = positive(j["lambda_c"], "lambda_c");
    if (j.contains("cutoff_h")) c.cutoff_h = positive(j["cutoff_h"], "cutoff_h");
    if (j.contains("cutoff_c")) c.cutoff_c = positive(j["cutoff_c"], "cutoff_c");
    if (j.contains("t_h")) c.t_h = parse_axis(j["t_h"], "t_h");
    if (j.contains("t_c")) c.t_c = parse_axis(j["t_c"], "t_c");
    if (j.contains("ratio_T")) c.ratio_T = parse_range(j["ratio_T"], "ratio_T");
    if (j.contains("ratio_omega")) c.ratio_omega = parse_range(j["ratio_omega"], "ratio_omega");
    if (j.contains("grid_step")) c.grid_step = positive(j["grid_step"], "grid_step");
    if (j.contains("output")) {
        if (!j["output"].is_string()) fail("output", "expected a string");
        c.output = j["output"].get<std::string>();
    }
    if (j.contains("dynamics")) {
        if (!j["dynamics"].is_string()) fail("dynamics", "expected a string");
        c.dynamics = parse_dynamics(j["dynamics"].get<std::string>());
    }
    if (j.contains("workers")) {
        c.workers = integer(j["workers"], "workers");
        if (c.workers < 1) fail("workers", "must be >= 1");
    }
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Config, "cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string serialize_config(const RunConfig& c) {
    json j;
    j["omega_h"] = c.omega_h;
    if (c.omega_c) j["omega_c"] = *c.omega_c;
    j["T_h"] = c.T_h;
    if (c.T_c) j["T_c"] = *c.T_c;
    j["lambda_h"] = c.lambda_h;
    j["lambda_c"] = c.lambda_c;
    j["cutoff_h"] = c.cutoff_h;
    j["cutoff_c"] = c.cutoff_c;
    if (c.t_h) j["t_h"] = axis_json(*c.t_h);
    if (c.t_c) j["t_c"] = axis_json(*c.t_c);
    if (c.ratio_T) j["ratio_T"] = range_json(*c.ratio_T);
    if (c.ratio_omega) j["ratio_omega"] = range_json(*c.ratio_omega);
    if (c.grid_step) j["grid_step"] = *c.grid_step;
    if (c.output) j["output"] = *c.output;
    j["dynamics"] = c.dynamics == Dynamics::Tcl2 ? "tcl2" : "markov";
    j["workers"] = c.workers;
    return j.dump(2);
}

void validate_for(const RunConfig& c, Command command) {
    if (!c.t_h) fail("t_h", "missing");
    if (!c.t_c) fail("t_c", "missing");
    const bool needs_scalar = command == Command::Cycle || command == Command::Stroke || command == Command::Kernels;
    if (needs_scalar) {
        if (!c.t_h->is_scalar()) fail("t_h", "this command needs a single stroke time");
        if (!c.t_c->is_scalar()) fail("t_c", "this command needs a single stroke time");
    }
    if (command == Command::Phase) {
        if (!c.ratio_T) fail("ratio_T", "missing (phase runs sweep T_c / T_h)");
        if (!c.ratio_omega) fail("ratio_omega", "missing (phase runs sweep omega_c / omega_h)");
        for (const auto& [name, range] : {std::pair{"ratio_T", *c.ratio_T}, std::pair{"ratio_omega", *c.ratio_omega}}) {
            if (!(range.min > 0.0) || !(range.max < 1.0)) fail(name, "ratios must lie in (0, 1)");
        }
        return;
    }
    if (!c.omega_c) fail("omega_c", "missing");
    if (!c.T_c) fail("T_c", "missing");
    if (!(c.omega_h > *c.omega_c)) fail("omega_c", "requires omega_h > omega_c");
    if (!(c.T_h > *c.T_c)) fail("T_c", "requires T_h > T_c");
}

CycleParameters cycle_parameters(const RunConfig& c, std::optional<double> ratio_T, std::optional<double> ratio_omega) {
    CycleParameters p;
    const double omega_c = ratio_omega ? *ratio_omega * c.omega_h : c.omega_c.value_or(0.0);
    const double t_c = ratio_T ? *ratio_T * c.T_h : c.T_c.value_or(0.0);
    p.hot = BathSpec{BathLabel::Hot, c.lambda_h, c.cutoff_h, c.T_h};
    p.cold = BathSpec{BathLabel::Cold, c.lambda_c, c.cutoff_c, t_c};
    p.omega_hot = c.omega_h;
    p.omega_cold = omega_c;
    return p;
}

}  // namespace otto
