#include "otto/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "otto/error.hpp"
#include "otto/special_functions.hpp"

namespace otto {

namespace {

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

void BathSpec::validate() const {
    const std::string name(to_string(label));
    if (!positive_finite(coupling)) throw Error(ErrorKind::Domain, name + " bath: coupling must be positive");
    if (!positive_finite(cutoff)) throw Error(ErrorKind::Domain, name + " bath: cutoff must be positive");
    if (!positive_finite(temperature)) {
        throw Error(ErrorKind::Domain, name + " bath: temperature must be positive");
    }
}

double spectral_density(double omega, const BathSpec& bath) {
    if (omega < 0.0) throw Error(ErrorKind::Domain, "spectral_density: omega must be >= 0");
    return bath.coupling * omega * std::exp(-omega / bath.cutoff);
}

double bose_occupation(double omega, double temperature) {
    return 1.0 / std::expm1(omega / temperature);
}

double thermal_ground_population(double omega, double temperature) {
    return 1.0 / (1.0 + std::exp(-omega / temperature));
}

double markov_relaxation_rate(double omega, const BathSpec& bath) {
    return 2.0 * std::numbers::pi * spectral_density(omega, bath) /
           std::tanh(0.5 * omega / bath.temperature);
}

double noise_kernel(double tau, const BathSpec& bath) {
    if (tau < 0.0) throw Error(ErrorKind::Domain, "noise_kernel: tau must be >= 0");
    const double om = bath.cutoff;
    const double temp = bath.temperature;
    const double x2 = (om * tau) * (om * tau);
    const double vacuum = om * om * (x2 - 1.0) / ((x2 + 1.0) * (x2 + 1.0));
    const double thermal = 2.0 * temp * temp * trigamma({temp / om, temp * tau}).real();
    return 2.0 * bath.coupling * (vacuum + thermal);
}

double dissipation_kernel(double tau, const BathSpec& bath) {
    if (tau < 0.0) throw Error(ErrorKind::Domain, "dissipation_kernel: tau must be >= 0");
    const double om = bath.cutoff;
    const double den = 1.0 + om * om * tau * tau;
    return 4.0 * bath.coupling * om * om * om * tau / (den * den);
}

double default_grid_step(double qubit_frequency, const BathSpec& bath) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    return std::min({0.05, two_pi / qubit_frequency / 64.0, two_pi / bath.cutoff / 64.0});
}

KernelGrid build_kernel_grid(const BathSpec& bath, double qubit_frequency, double t_max, double step) {
    bath.validate();
    if (!positive_finite(qubit_frequency)) {
        throw Error(ErrorKind::Domain, "build_kernel_grid: qubit frequency must be positive");
    }
    if (!positive_finite(t_max)) throw Error(ErrorKind::Domain, "build_kernel_grid: t_max must be positive");
    if (!positive_finite(step) || step > t_max) {
        throw Error(ErrorKind::Domain, "build_kernel_grid: step must satisfy 0 < h <= t_max");
    }
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double coarsest = std::min(two_pi / qubit_frequency, two_pi / bath.cutoff) / 16.0;
    if (step > coarsest) {
        throw Error(ErrorKind::GridStep, "build_kernel_grid: step " + std::to_string(step) +
                                             " coarser than resolution limit " + std::to_string(coarsest));
    }
    const double intervals = std::ceil(t_max / step - 1e-9);
    if (intervals + 1.0 > static_cast<double>(kMaxGridNodes)) {
        throw Error(ErrorKind::GridStep, "build_kernel_grid: " + std::to_string(intervals + 1.0) +
                                             " nodes exceed the node limit");
    }
    const auto n = static_cast<std::size_t>(intervals) + 1;

    KernelGrid grid;
    grid.bath_ = bath;
    grid.qubit_frequency_ = qubit_frequency;
    grid.step_ = step;
    grid.d1_.resize(n);
    grid.d2_.resize(n);

    // a, b and A are accumulated on a sub-grid kSubSteps times finer and sampled at the nodes.
    const std::size_t m = (n - 1) * kSubSteps + 1;
    const double sub = step / static_cast<double>(kSubSteps);
    std::vector<double> a_integrand(m), b_integrand(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double tau = sub * static_cast<double>(i);
        const double c = std::cos(qubit_frequency * tau);
        const double s = std::sin(qubit_frequency * tau);
        const double d1 = noise_kernel(tau, bath);
        const double d2 = dissipation_kernel(tau, bath);
        if (i % kSubSteps == 0) {
            grid.d1_[i / kSubSteps] = d1;
            grid.d2_[i / kSubSteps] = d2;
        }
        a_integrand[i] = -2.0 * d1 * c;
        b_integrand[i] = -(d1 * c + d2 * s);
    }
    const auto a_fine = cumulative_simpson(a_integrand, sub);
    const auto b_fine = cumulative_simpson(b_integrand, sub);
    const auto big_a_fine = cumulative_simpson(a_fine, sub);
    grid.a_.resize(n);
    grid.b_.resize(n);
    grid.big_a_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        grid.a_[i] = a_fine[i * kSubSteps];
        grid.b_[i] = b_fine[i * kSubSteps];
        grid.big_a_[i] = big_a_fine[i * kSubSteps];
    }
    return grid;
}

KernelGrid build_kernel_grid(const BathSpec& bath, double qubit_frequency, double t_max) {
    bath.validate();
    return build_kernel_grid(bath, qubit_frequency, t_max, default_grid_step(qubit_frequency, bath));
}

}  // namespace otto
