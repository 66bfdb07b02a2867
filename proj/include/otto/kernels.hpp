// kernels.hpp: Ohmic bath correlation kernels and TCL2 coefficient tables.
#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace otto {

enum class BathLabel { Hot, Cold };

constexpr std::string_view to_string(BathLabel label) noexcept {
    return label == BathLabel::Hot ? "hot" : "cold";
}

struct BathSpec {
    BathLabel label = BathLabel::Hot;
    double coupling = 0.01;     // lambda
    double cutoff = 0.4;        // Omega
    double temperature = 1.0;   // T, k_B = 1

    // Throws Error{Domain} unless all three parameters are positive and finite.
    void validate() const;
};

// J(w) = lambda w exp(-w / Omega); Error{Domain} for w < 0.
double spectral_density(double omega, const BathSpec& bath);

// n(w) = 1 / (exp(w / T) - 1).
double bose_occupation(double omega, double temperature);

// Ground-state population of the thermal qubit, (1 + n) / (1 + 2 n).
double thermal_ground_population(double omega, double temperature);

// Markovian relaxation rate 2 pi J(w) (1 + 2 n(w)).
double markov_relaxation_rate(double omega, const BathSpec& bath);

// D1(tau) = 2 int_0^inf J(w) coth(w / 2T) cos(w tau) dw, evaluated in closed form.
double noise_kernel(double tau, const BathSpec& bath);

// D2(tau) = 2 int_0^inf J(w) sin(w tau) dw = 4 lambda Omega^3 tau / (1 + Omega^2 tau^2)^2.
double dissipation_kernel(double tau, const BathSpec& bath);

// min(0.05, (2 pi / w0) / 64, (2 pi / Omega) / 64).
double default_grid_step(double qubit_frequency, const BathSpec& bath);

constexpr std::size_t kMaxGridNodes = 10'000'000;

// Refinement of the quadrature sub-grid used for a, b and A.
constexpr std::size_t kSubSteps = 4;

// Kernels and TCL2 coefficients on tau_i = i h, i = 0 .. size()-1.
//   a(tau) = -2 int_0^tau D1(u) cos(w0 u) du
//   b(tau) = -int_0^tau [D1(u) cos(w0 u) + D2(u) sin(w0 u)] du
//   A(tau) = int_0^tau a(s) ds
// The integrals are composite Simpson on a sub-grid of step h / kSubSteps.
// Immutable once built; shared read-only between workers.
class KernelGrid {
public:
    const BathSpec& bath() const noexcept { return bath_; }
    double qubit_frequency() const noexcept { return qubit_frequency_; }
    double step() const noexcept { return step_; }
    std::size_t size() const noexcept { return d1_.size(); }
    double tau(std::size_t i) const noexcept { return step_ * static_cast<double>(i); }
    double t_max() const noexcept { return tau(size() - 1); }

    const std::vector<double>& noise() const noexcept { return d1_; }
    const std::vector<double>& dissipation() const noexcept { return d2_; }
    const std::vector<double>& a() const noexcept { return a_; }
    const std::vector<double>& b() const noexcept { return b_; }
    const std::vector<double>& a_integral() const noexcept { return big_a_; }

private:
    friend KernelGrid build_kernel_grid(const BathSpec&, double, double, double);
    KernelGrid() = default;

    BathSpec bath_;
    double qubit_frequency_ = 0.0;
    double step_ = 0.0;
    std::vector<double> d1_, d2_, a_, b_, big_a_;
};

// Builds the tables up to the first node at or beyond t_max.
// Error{GridStep} if h is coarser than 1/16 of the qubit or cutoff period, or the grid
// would need more than kMaxGridNodes nodes. Error{Domain} for invalid arguments.
KernelGrid build_kernel_grid(const BathSpec& bath, double qubit_frequency, double t_max, double step);

// Same with default_grid_step.
KernelGrid build_kernel_grid(const BathSpec& bath, double qubit_frequency, double t_max);

}  // namespace otto
