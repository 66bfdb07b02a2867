// special_functions.hpp: complex trigamma and the quadrature rules used by the kernels.
#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace otto {

using ComplexValue = std::complex<double>;
using RealFunction = std::function<double(double)>;

// First derivative of the digamma function, psi'(z) = sum_{k>=0} 1/(z+k)^2.
// Upward recurrence to Re z >= 10, then the Bernoulli asymptotic series through B_12.
// Throws Error{Pole} within 1e-12 of a nonpositive integer.
ComplexValue trigamma(ComplexValue z);

// Integral of uniformly sampled values at every node (I[0] = 0).
// Even nodes use composite Simpson; node 1 uses the four-point cubic rule and odd
// nodes chain Simpson panels from it, so every prefix is exact for cubics.
// Two or three samples fall back to the trapezoid / quadratic rule.
std::vector<double> cumulative_simpson(std::span<const double> values, double step);

// Same rule, complex samples.
std::vector<ComplexValue> cumulative_simpson(std::span<const ComplexValue> values, double step);

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

// Composite Simpson with step halving and one Richardson correction.
// Throws Error{NonConvergence} if the estimate exceeds tol at maximum refinement.
QuadratureResult integrate_finite_detailed(const RealFunction& f, double a, double b, double tol);
double integrate_finite(const RealFunction& f, double a, double b, double tol);

// Integral over [0, inf) of an integrand decaying at least like exp(-x / decay_scale).
// The cut point grows until the sampled envelope bounds the tail below tol/4, then the
// range is doubled until the added piece is below tol/2.
double integrate_semi_infinite(const RealFunction& f, double decay_scale, double tol);

}  // namespace otto
