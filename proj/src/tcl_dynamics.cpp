#include "otto/tcl_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "otto/error.hpp"

namespace otto {

namespace {

// Index of the first node at or beyond t.
std::size_t end_node(double t, double step) {
    return static_cast<std::size_t>(std::ceil(t / step - 1e-9));
}

}  // namespace

double PopulationTrace::at(double t) const {
    if (t < 0.0 || t > end_time_ * (1.0 + 1e-12) + 1e-15) {
        throw Error(ErrorKind::Domain, "PopulationTrace::at: t outside [0, end_time]");
    }
    const double x = t / step_;
    auto i = static_cast<std::size_t>(std::floor(x));
    if (i + 1 >= values_.size()) return values_.back();
    const double frac = x - static_cast<double>(i);
    return values_[i] + frac * (values_[i + 1] - values_[i]);
}

PopulationTrace propagate(double initial_ground, const KernelGrid& grid, double t) {
    if (!(initial_ground >= 0.0 && initial_ground <= 1.0)) {
        throw Error(ErrorKind::Domain, "propagate: initial population must lie in [0, 1]");
    }
    if (!(t >= 0.0) || t > grid.t_max() * (1.0 + 1e-12)) {
        throw Error(ErrorKind::Domain, "propagate: t = " + std::to_string(t) + " outside [0, " +
                                           std::to_string(grid.t_max()) + "]");
    }
    const double h = grid.step();
    const auto& big_a = grid.a_integral();
    const auto& b = grid.b();
    const std::size_t last = std::min(end_node(t, h), grid.size() - 1);

    std::vector<double> rho(last + 1);
    rho[0] = initial_ground;
    // rho(tau_j) = exp(A_j - A_i) rho(tau_i) - int_{tau_i}^{tau_j} b(s) exp(A_j - A(s)) ds,
    // with the same panel rules as cumulative_simpson.
    auto w = [&](std::size_t j, std::size_t s) { return b[s] * std::exp(big_a[j] - big_a[s]); };
    if (last >= 1) {
        const std::size_t n = grid.size();
        double inc;
        if (n >= 4) {
            inc = h / 24.0 * (9.0 * w(1, 0) + 19.0 * w(1, 1) - 5.0 * w(1, 2) + w(1, 3));
        } else if (n == 3) {
            inc = h / 12.0 * (5.0 * w(1, 0) + 8.0 * w(1, 1) - w(1, 2));
        } else {
            inc = 0.5 * h * (w(1, 0) + w(1, 1));
        }
        rho[1] = std::exp(big_a[1] - big_a[0]) * rho[0] - inc;
    }
    for (std::size_t j = 2; j <= last; ++j) {
        const double inc = h / 3.0 * (w(j, j - 2) + 4.0 * w(j, j - 1) + w(j, j));
        rho[j] = std::exp(big_a[j] - big_a[j - 2]) * rho[j - 2] - inc;
    }

    for (std::size_t j = 0; j <= last; ++j) {
        if (!(rho[j] >= -kPositivityTolerance && rho[j] <= 1.0 + kPositivityTolerance)) {
            throw Error(ErrorKind::Positivity,
                        "propagate: rho00 = " + std::to_string(rho[j]) + " at tau = " +
                            std::to_string(grid.tau(j)) + " (" + std::string(to_string(grid.bath().label)) +
                            " bath); grid too coarse or coupling outside TCL2 validity");
        }
    }
    return PopulationTrace(h, t, initial_ground, std::move(rho));
}

TransitionTraces transition_populations(const KernelGrid& grid, double t) {
    return {propagate(1.0, grid, t), propagate(0.0, grid, t)};
}

double instantaneous_decay_rate(const PopulationTrace& trace, double t, double stationary) {
    const double h = trace.step();
    if (t - h < 0.0 || t + h > trace.end_time()) {
        throw Error(ErrorKind::Domain, "instantaneous_decay_rate: t too close to the trace ends");
    }
    const double slope = (trace.at(t + h) - trace.at(t - h)) / (2.0 * h);
    return -slope / (trace.at(t) - stationary);
}

double instantaneous_decay_rate(const PopulationTrace& upper, const PopulationTrace& lower, double t) {
    const double h = upper.step();
    if (h != lower.step() || upper.initial() == lower.initial()) {
        throw Error(ErrorKind::Domain, "instantaneous_decay_rate: traces need one step and distinct starts");
    }
    const double end = std::min(upper.end_time(), lower.end_time());
    if (t - h < 0.0 || t + h > end) {
        throw Error(ErrorKind::Domain, "instantaneous_decay_rate: t too close to the trace ends");
    }
    auto gap = [&](double s) { return upper.at(s) - lower.at(s); };
    return -(gap(t + h) - gap(t - h)) / (2.0 * h) / gap(t);
}

}  // namespace otto
