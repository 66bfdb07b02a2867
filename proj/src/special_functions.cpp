#include "otto/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "otto/error.hpp"

namespace otto {

namespace {

constexpr double kPoleTolerance = 1e-12;
constexpr double kAsymptoticThreshold = 10.0;

// B_2 .. B_12
constexpr std::array<double, 6> kBernoulli = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0,
};

bool near_nonpositive_integer(ComplexValue z) {
    if (std::abs(z.imag()) > kPoleTolerance) return false;
    if (z.real() > kPoleTolerance) return false;
    return std::abs(z.real() - std::round(z.real())) <= kPoleTolerance;
}

template <class T>
std::vector<T> cumulative_simpson_impl(std::span<const T> f, double h) {
    const std::size_t n = f.size();
    std::vector<T> out(n, T(0));
    if (n < 2) return out;
    if (n == 2) {
        out[1] = 0.5 * h * (f[0] + f[1]);
        return out;
    }
    if (n == 3) {
        out[1] = h / 12.0 * (5.0 * f[0] + 8.0 * f[1] - f[2]);
    } else {
        out[1] = h / 24.0 * (9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3]);
    }
    for (std::size_t i = 2; i < n; ++i) {
        out[i] = out[i - 2] + h / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i]);
    }
    return out;
}

}  // namespace

ComplexValue trigamma(ComplexValue z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw Error(ErrorKind::Domain, "trigamma: non-finite argument");
    }
    if (near_nonpositive_integer(z)) {
        throw Error(ErrorKind::Pole, "trigamma: argument at a nonpositive integer (" +
                                         std::to_string(z.real()) + ")");
    }
    ComplexValue shifted = 0.0;
    while (z.real() < kAsymptoticThreshold) {
        shifted += 1.0 / (z * z);
        z += 1.0;
    }
    const ComplexValue w = 1.0 / z;
    const ComplexValue w2 = w * w;
    ComplexValue series = kBernoulli.back();
    for (auto it = kBernoulli.rbegin() + 1; it != kBernoulli.rend(); ++it) {
        series = *it + w2 * series;
    }
    return shifted + w + 0.5 * w2 + w * w2 * series;
}

std::vector<double> cumulative_simpson(std::span<const double> values, double step) {
    return cumulative_simpson_impl(values, step);
}

std::vector<ComplexValue> cumulative_simpson(std::span<const ComplexValue> values, double step) {
    return cumulative_simpson_impl(values, step);
}

QuadratureResult integrate_finite_detailed(const RealFunction& f, double a, double b, double tol) {
    if (!(tol > 0.0)) throw Error(ErrorKind::Domain, "integrate_finite: tol must be positive");
    if (b < a) throw Error(ErrorKind::Domain, "integrate_finite: requires a <= b");
    QuadratureResult result;
    if (a == b) return result;

    constexpr std::size_t kMinIntervals = 64;
    constexpr int kMaxLevels = 18;

    // Trapezoid sums refined by midpoints; Simpson S_2n = (4 T_2n - T_n) / 3.
    std::size_t n = kMinIntervals;
    double h = (b - a) / static_cast<double>(n);
    double sum = 0.5 * (f(a) + f(b));
    for (std::size_t i = 1; i < n; ++i) sum += f(a + h * static_cast<double>(i));
    result.evaluations = n + 1;
    double trap = h * sum;
    double simpson_prev = std::numeric_limits<double>::quiet_NaN();
    int settled = 0;

    for (int level = 0; level < kMaxLevels; ++level) {
        double mid = 0.0;
        for (std::size_t i = 0; i < n; ++i) mid += f(a + h * (static_cast<double>(i) + 0.5));
        result.evaluations += n;
        sum += mid;
        n *= 2;
        h *= 0.5;
        const double trap_next = h * sum;
        const double simpson = (4.0 * trap_next - trap) / 3.0;
        trap = trap_next;
        if (std::isfinite(simpson_prev)) {
            const double err = std::abs(simpson - simpson_prev) / 15.0;
            result.value = simpson + (simpson - simpson_prev) / 15.0;
            result.error_estimate = err;
            // Two consecutive levels below tol guard against aliasing of oscillatory integrands.
            settled = (err <= tol) ? settled + 1 : 0;
            if (settled >= 2) return result;
        }
        simpson_prev = simpson;
    }
    throw Error(ErrorKind::NonConvergence,
                "integrate_finite: error estimate " + std::to_string(result.error_estimate) +
                    " exceeds tol " + std::to_string(tol));
}

double integrate_finite(const RealFunction& f, double a, double b, double tol) {
    return integrate_finite_detailed(f, a, b, tol).value;
}

double integrate_semi_infinite(const RealFunction& f, double decay_scale, double tol) {
    if (!(decay_scale > 0.0)) {
        throw Error(ErrorKind::Domain, "integrate_semi_infinite: decay_scale must be positive");
    }
    if (!(tol > 0.0)) throw Error(ErrorKind::Domain, "integrate_semi_infinite: tol must be positive");

    auto envelope = [&](double x) {
        double m = 0.0;
        for (int k = 0; k <= 16; ++k) m = std::max(m, std::abs(f(x + decay_scale * k / 16.0)));
        return m;
    };
    double cut = decay_scale * std::max(1.0, std::log(1.0 / tol));
    for (int guard = 0; envelope(cut) * decay_scale > 0.25 * tol; ++guard) {
        if (guard > 10000) {
            throw Error(ErrorKind::NonConvergence, "integrate_semi_infinite: integrand does not decay");
        }
        cut += decay_scale;
    }

    double total = integrate_finite(f, 0.0, cut, 0.5 * tol);
    for (int doubling = 0; doubling < 20; ++doubling) {
        const double piece = integrate_finite(f, cut, 2.0 * cut, 0.25 * tol);
        total += piece;
        cut *= 2.0;
        if (std::abs(piece) <= 0.5 * tol) return total;
    }
    throw Error(ErrorKind::NonConvergence, "integrate_semi_infinite: tail did not settle");
}

}  // namespace otto
