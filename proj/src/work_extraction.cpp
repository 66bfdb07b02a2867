#include "otto/work_extraction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "otto/error.hpp"

namespace otto {

namespace {

constexpr double kStateTolerance = 1e-12;
constexpr double kEnergyMatch = 1e-12;

double max_abs(const Matrix8& m) { return m.cwiseAbs().maxCoeff(); }

std::string format(const char* what, double value) {
    std::ostringstream os;
    os.precision(3);
    os << what << " = " << std::scientific << value;
    return os.str();
}

}  // namespace

Matrix8 TripartiteHamiltonian::matrix() const {
    Matrix8 m = Matrix8::Zero();
    for (int i = 0; i < 8; ++i) m(i, i) = diagonal(i);
    return m;
}

double TripartiteHamiltonian::system_clock_energy(int system, int clock) const {
    const bool expansion = direction == Direction::Expansion;
    const double before = expansion ? omega_hot : omega_cold;
    const double after = expansion ? omega_cold : omega_hot;
    return system * (clock == 0 ? before : after);
}

double TripartiteHamiltonian::storage_energy(int storage) const {
    const double quantum = direction == Direction::Expansion ? omega_hot - omega_cold : omega_cold - omega_hot;
    return storage * quantum;
}

TripartiteHamiltonian build_hamiltonian(double omega_hot, double omega_cold, Direction direction) {
    if (!(omega_cold > 0.0) || !(omega_hot > omega_cold)) {
        throw Error(ErrorKind::Ordering, "build_hamiltonian: requires omega_hot > omega_cold > 0");
    }
    TripartiteHamiltonian h;
    h.direction = direction;
    h.omega_hot = omega_hot;
    h.omega_cold = omega_cold;
    for (int s = 0; s < 2; ++s)
        for (int c = 0; c < 2; ++c)
            for (int w = 0; w < 2; ++w)
                h.diagonal(basis_index(s, c, w)) = h.system_clock_energy(s, c) + h.storage_energy(w);
    return h;
}

Matrix8 build_unitary() {
    Matrix8 u = Matrix8::Zero();
    auto dyad = [&](int to, int from) { u(to, from) = 1.0; };
    dyad(basis_index(0, 1, 0), basis_index(0, 0, 0));
    dyad(basis_index(0, 0, 0), basis_index(0, 1, 0));
    dyad(basis_index(1, 1, 1), basis_index(1, 0, 0));
    dyad(basis_index(1, 0, 0), basis_index(1, 1, 1));
    dyad(basis_index(0, 1, 1), basis_index(0, 0, 1));
    dyad(basis_index(0, 0, 1), basis_index(0, 1, 1));
    dyad(basis_index(1, 1, 0), basis_index(1, 1, 0));
    dyad(basis_index(1, 0, 1), basis_index(1, 0, 1));
    return u;
}

void TripartiteState::validate() const {
    const double herm = max_abs(rho - rho.adjoint());
    if (herm > kStateTolerance) throw Error(ErrorKind::Normalization, format("state not Hermitian, deviation", herm));
    const double trace_err = std::abs(rho.trace() - 1.0);
    if (trace_err > kStateTolerance) throw Error(ErrorKind::Normalization, format("state trace error", trace_err));
    Eigen::SelfAdjointEigenSolver<Matrix8> solver(rho, Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -1e-10) throw Error(ErrorKind::Normalization, format("state not positive, min eigenvalue", min_eig));
}

Matrix4 TripartiteState::system_clock() const {
    Matrix4 out = Matrix4::Zero();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int w = 0; w < 2; ++w) out(i, j) += rho(2 * i + w, 2 * j + w);
    return out;
}

TripartiteState initial_state(double excited, double ground) {
    if (!(excited >= 0.0 && excited <= 1.0) || !(ground >= 0.0 && ground <= 1.0) ||
        std::abs(excited + ground - 1.0) > kStateTolerance) {
        throw Error(ErrorKind::Normalization, "initial_state: populations must lie in [0, 1] and sum to one");
    }
    TripartiteState s;
    s.rho(basis_index(1, 0, 0), basis_index(1, 0, 0)) = excited;
    s.rho(basis_index(0, 0, 0), basis_index(0, 0, 0)) = ground;
    return s;
}

TripartiteState apply_extraction(double excited, double ground, const Matrix8& unitary) {
    const auto initial = initial_state(excited, ground);
    TripartiteState out;
    out.rho = unitary * initial.rho * unitary.adjoint();
    return out;
}

double WorkOutcome::expected_work() const {
    double sum = 0.0;
    for (const auto& branch : branches) sum += branch.work * branch.probability;
    return sum;
}

WorkOutcome measure_storage(const TripartiteState& state, const TripartiteHamiltonian& hamiltonian) {
    WorkOutcome outcome;
    for (int k = 0; k < 2; ++k) {
        Matrix8 projector = Matrix8::Zero();
        for (int s = 0; s < 2; ++s)
            for (int c = 0; c < 2; ++c) projector(basis_index(s, c, k), basis_index(s, c, k)) = 1.0;
        const Matrix8 projected = projector * state.rho * projector;
        WorkBranch branch;
        branch.storage_level = k;
        branch.work = hamiltonian.storage_energy(k) - hamiltonian.storage_energy(0);
        branch.probability = std::max(0.0, projected.trace().real());
        if (branch.probability > 0.0) branch.post_state = TripartiteState{projected / branch.probability};
        outcome.branches.push_back(std::move(branch));
    }
    return outcome;
}

double expected_work_closed_form(double excited, const TripartiteHamiltonian& hamiltonian) {
    return excited * hamiltonian.storage_energy(1);
}

ConservationReport verify_conservation(const TripartiteHamiltonian& hamiltonian, const Matrix8& unitary,
                                       double excited) {
    ConservationReport report;
    const Matrix8 h = hamiltonian.matrix();
    report.commutator_max = max_abs(unitary * h - h * unitary);
    if (report.commutator_max >= kCommutatorTolerance) {
        report.violations.push_back(format("[U, H] max entry", report.commutator_max));
    }

    Matrix8 h_sc = Matrix8::Zero();
    for (int s = 0; s < 2; ++s)
        for (int c = 0; c < 2; ++c)
            for (int w = 0; w < 2; ++w)
                h_sc(basis_index(s, c, w), basis_index(s, c, w)) = hamiltonian.system_clock_energy(s, c);

    const auto initial = initial_state(excited, 1.0 - excited);
    const auto outcome = measure_storage(apply_extraction(excited, 1.0 - excited, unitary), hamiltonian);
    report.initial_energy = (h_sc * initial.rho).trace().real();
    report.mean_work = outcome.expected_work();
    for (const auto& branch : outcome.branches) {
        if (branch.post_state) report.final_energy += branch.probability * (h_sc * branch.post_state->rho).trace().real();
    }
    report.level1_residual = report.initial_energy - report.mean_work - report.final_energy;
    if (std::abs(report.level1_residual) > kLevel1Tolerance) {
        report.violations.push_back(format("Level-1 residual", report.level1_residual));
    }

    for (int x = 0; x < 2; ++x) {
        const double h_x = hamiltonian.system_clock_energy(x, 0);
        const auto branches = measure_storage(apply_extraction(x, 1 - x, unitary), hamiltonian).branches;
        for (const auto& branch : branches) {
            if (!branch.post_state) continue;
            const Matrix4 sc = branch.post_state->system_clock();
            const double target = h_x - branch.work;
            Matrix4 projector = Matrix4::Zero();
            for (int s = 0; s < 2; ++s)
                for (int c = 0; c < 2; ++c)
                    if (std::abs(hamiltonian.system_clock_energy(s, c) - target) <= kEnergyMatch)
                        projector(2 * s + c, 2 * s + c) = 1.0;
            const double outside = (sc - projector * sc * projector).cwiseAbs().maxCoeff();
            report.level4_residual = std::max(report.level4_residual, outside);
            if (outside > 0.0) {
                std::ostringstream os;
                os << "Level-4 violated for |" << x << "> outcome w = " << branch.work << ", weight outside "
                   << outside;
                report.violations.push_back(os.str());
            }
        }
    }
    return report;
}

}  // namespace otto
