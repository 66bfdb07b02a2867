// tcl_dynamics.hpp: TCL2 propagation of the qubit populations through one isochoric stroke.
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "otto/kernels.hpp"

namespace otto {

// Ground-state population rho00 on the nodes 0 .. k of a kernel grid, k the first node at
// or beyond end_time. rho11 = 1 - rho00 is never stored.
class PopulationTrace {
public:
    PopulationTrace(double step, double end_time, double initial, std::vector<double> values)
        : step_(step), end_time_(end_time), initial_(initial), values_(std::move(values)) {}

    double step() const noexcept { return step_; }
    double end_time() const noexcept { return end_time_; }
    double initial() const noexcept { return initial_; }
    std::size_t size() const noexcept { return values_.size(); }
    const std::vector<double>& values() const noexcept { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }

    // Linear interpolation between bracketing nodes; t in [0, end_time].
    double at(double t) const;
    double final_value() const { return at(end_time_); }

private:
    double step_;
    double end_time_;
    double initial_;
    std::vector<double> values_;
};

constexpr double kPositivityTolerance = 1e-9;

// rho00(tau) = exp(A(tau)) (rho00(0) - int_0^tau b(s) exp(-A(s)) ds) on the grid nodes.
// The product is accumulated panel by panel as exp(A(tau) - A(s)) so that long strokes
// never form exp(-A) itself. Error{Positivity} if a node leaves [-1e-9, 1 + 1e-9];
// Error{Domain} for t outside [0, t_max] or an initial value outside [0, 1].
PopulationTrace propagate(double initial_ground, const KernelGrid& grid, double t);

// The two pure-state propagations rho_{0,00} (start in |0>) and rho_{1,00} (start in |1>).
struct TransitionTraces {
    PopulationTrace from_ground;
    PopulationTrace from_excited;
};

TransitionTraces transition_populations(const KernelGrid& grid, double t);

// -(d rho00 / dt) / (rho00 - stationary) at node-interpolated time t, centered difference.
double instantaneous_decay_rate(const PopulationTrace& trace, double t, double stationary);

// Same, for the difference of two traces on one grid: the inhomogeneous term cancels, leaving
// the relaxation rate -a(t) itself. Throws Domain if the traces differ in step or start equal.
double instantaneous_decay_rate(const PopulationTrace& upper, const PopulationTrace& lower, double t);

}  // namespace otto
