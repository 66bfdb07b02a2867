// error.hpp: exception type shared by every module of the Otto-cycle simulator.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace otto {

enum class ErrorKind {
    Pole,             // trigamma evaluated at a nonpositive integer
    NonConvergence,   // quadrature error estimate above tolerance at maximum refinement
    Domain,           // argument outside an operation's domain
    GridStep,         // kernel grid step fails the resolution rule
    Positivity,       // population left [0, 1]
    SingularMap,      // limit-cycle map has no unique fixed point
    Ordering,         // omega_h <= omega_c in the extraction Hamiltonian
    Normalization,    // state populations do not sum to one
    Config,           // invalid run configuration
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Pole: return "pole";
        case ErrorKind::NonConvergence: return "non_convergence";
        case ErrorKind::Domain: return "domain";
        case ErrorKind::GridStep: return "grid_step";
        case ErrorKind::Positivity: return "positivity";
        case ErrorKind::SingularMap: return "singular_map";
        case ErrorKind::Ordering: return "ordering";
        case ErrorKind::Normalization: return "normalization";
        case ErrorKind::Config: return "config";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace otto
