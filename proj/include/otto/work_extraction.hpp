// work_extraction.hpp: measurement-based work extraction on qubit (S) x clock (C) x storage (W).
//
// Basis |s c w>, index 4 s + 2 c + w. The clock records which qubit Hamiltonian is active
// (|0>_C before the adiabatic stroke, |1>_C after it); the two-level storage receives the
// work and is read out projectively.
#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace otto {

using Matrix8 = Eigen::Matrix<std::complex<double>, 8, 8>;
using Matrix4 = Eigen::Matrix<std::complex<double>, 4, 4>;

constexpr int basis_index(int system, int clock, int storage) { return 4 * system + 2 * clock + storage; }

enum class Direction {
    Expansion,    // w_h -> w_c, storage level |1> carries w_h - w_c
    Compression,  // w_c -> w_h, every w_h and w_c swapped; storage level |1> carries w_c - w_h
};

struct TripartiteHamiltonian {
    Direction direction = Direction::Expansion;
    double omega_hot = 1.0;
    double omega_cold = 0.5;
    Eigen::Matrix<double, 8, 1> diagonal = Eigen::Matrix<double, 8, 1>::Zero();

    Matrix8 matrix() const;
    // Qubit-clock part: w_before s for clock 0, w_after s for clock 1.
    double system_clock_energy(int system, int clock) const;
    double storage_energy(int storage) const;
};

// Error{Ordering} unless omega_hot > omega_cold > 0.
TripartiteHamiltonian build_hamiltonian(double omega_hot, double omega_cold, Direction direction);

// Quench permutation: |000><->|010>, |100><->|111>, |001><->|011>, |110> and |101> fixed.
Matrix8 build_unitary();

struct TripartiteState {
    Matrix8 rho = Matrix8::Zero();

    // Error{Normalization} unless Hermitian (1e-12), unit trace (1e-12) and eigenvalues >= -1e-10.
    void validate() const;
    Matrix4 system_clock() const;  // partial trace over the storage
};

// Qubit diagonal state with clock and storage in |0>.
// Error{Normalization} unless both populations lie in [0, 1] and sum to one within 1e-12.
TripartiteState initial_state(double excited, double ground);

// U rho0 U^dagger for the diagonal qubit state; equals excited |111><111| + ground |010><010|.
TripartiteState apply_extraction(double excited, double ground, const Matrix8& unitary = build_unitary());

struct WorkBranch {
    int storage_level = 0;
    double work = 0.0;  // storage energy gained
    double probability = 0.0;
    std::optional<TripartiteState> post_state;  // absent for zero-probability outcomes
};

struct WorkOutcome {
    std::vector<WorkBranch> branches;
    double expected_work() const;
};

// Projective storage readout P_k = I_S (x) I_C (x) |k><k|_W; storage assumed to start in |0>.
WorkOutcome measure_storage(const TripartiteState& state, const TripartiteHamiltonian& hamiltonian);

// sum_j w_j p_j in closed form, rho_11 (storage energy of |1>).
double expected_work_closed_form(double excited, const TripartiteHamiltonian& hamiltonian);

struct ConservationReport {
    double commutator_max = 0.0;      // max |[U, H]_ij|
    double initial_energy = 0.0;      // Tr[H_SC rho0]
    double mean_work = 0.0;           // sum_j w_j p_j
    double final_energy = 0.0;        // sum_j Tr[H_SC E_j(rho0)]
    double level1_residual = 0.0;     // initial - work - final
    double level4_residual = 0.0;     // max weight outside the h_x - w_j eigenspace
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

constexpr double kCommutatorTolerance = 1e-13;
constexpr double kLevel1Tolerance = 1e-12;

// Checks [U, H] = 0, the mean-value energy balance for the given qubit state, and that every
// outcome from each qubit energy eigenstate leaves the qubit-clock pair in the eigenspace of
// energy h_x - w_j. Violations are reported, not thrown.
ConservationReport verify_conservation(const TripartiteHamiltonian& hamiltonian, const Matrix8& unitary,
                                       double excited);

}  // namespace otto
