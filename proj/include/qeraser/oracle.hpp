#pragma once

#include "qeraser/measurement.hpp"
#include "qeraser/model.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace qeraser::oracle {

// Deliberately naive dense machinery used as independent ground truth for
// every closed-form quantity.  Nothing here shares code with the
// single-excitation fast path.

// Square complex matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    std::size_t dim() const { return dim_; }
    complex& at(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const complex& at(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

    Matrix adjoint() const;
    complex trace() const;
    double hermiticity_defect() const;  // max |A - A^dagger| entry

    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator*(const Matrix& rhs) const;

private:
    std::size_t dim_ = 0;
    std::vector<complex> data_;
};

// Full register statevector over (source qubit, probe atoms 1..n, mode
// truncated to {0,1} photons), dimension 2^(n+2).  Bit layout of an index:
// source is the most significant bit, then atoms in interaction order, the
// mode occupation is bit 0.
class DenseState {
public:
    explicit DenseState(int n_atoms);

    int n_atoms() const { return n_atoms_; }
    std::size_t dim() const { return amplitudes_.size(); }
    complex& operator[](std::size_t idx) { return amplitudes_[idx]; }
    const complex& operator[](std::size_t idx) const { return amplitudes_[idx]; }

    int source_bit() const { return n_atoms_ + 1; }
    int atom_bit(int i) const;  // i = 1..n
    int mode_bit() const { return 0; }

    double norm() const;
    // Total amplitude weight on basis states whose excitation count differs
    // from one; certifies that the two-level mode truncation is exact.
    double off_sector_weight() const;

private:
    int n_atoms_ = 0;
    std::vector<complex> amplitudes_;
};

// Subsystems to keep in a reduction.  The reduced index orders kept parts as
// (source, atoms ascending, mode), mirroring the register layout.
struct SubsystemSet {
    bool source = false;
    std::vector<int> atoms;  // 1-based labels
    bool mode = false;
};

// (|g,1> + |e,0>)/sqrt(2) on (source, mode), all n probe atoms ground.
// Capped at n <= 12 (register dimension 16384).
DenseState build_initial(int n_atoms);

// Resonant exchange between probe atom k (1-based) and the mode: rotates
// every (atom ground, 1 photon) <-> (atom excited, 0 photons) pair by
// [[cos, -i sin], [-i sin, cos]], other labels fixed.  Requires
// 0 < g_t < pi/2.
DenseState jc_apply(const DenseState& state, int atom_index, double g_t);

// Reduced density operator over the kept subsystems.
Matrix partial_trace(const DenseState& state, const SubsystemSet& keep);

// Reduction of a register of qubits (all dimension 2, labels 0..k-1) given
// as a density operator; keep lists the labels that survive, ascending.
Matrix partial_trace(const Matrix& rho, int n_qubits, const std::vector<int>& keep);

// Eigenvalues (ascending) of a Hermitian matrix by cyclic Jacobi rotations,
// iterated until the off-diagonal Frobenius mass drops below 1e-13.  Throws
// on input whose hermiticity defect exceeds 1e-10.
std::vector<double> hermitian_eigenvalues(const Matrix& h);

// Same sweep with accumulated eigenvectors (columns of the returned unitary
// match the eigenvalue order).
std::pair<std::vector<double>, Matrix> hermitian_eigensystem(const Matrix& h);

// Sum of absolute eigenvalues.
double trace_norm(const Matrix& h);

// rho_{source,probe} split along the source's energy basis:
//   rho = w1 |g><g| rho1 + w2 |e><e| rho2 + sqrt(w1 w2)(chi |e><g| + h.c.)
struct ConditionalDecomposition {
    double w1 = 0.0;
    Matrix rho_e_1;
    double w2 = 0.0;
    Matrix rho_e_2;
    Matrix chi;
};

ConditionalDecomposition conditional_decomposition(const DenseState& state,
                                                   const SubsystemSet& probe);

// Trace norm of w1 rho1 - w2 rho2 for the given probe subsystem: the most
// path information that any readout of the probe could reveal.  The probe
// set must not contain the source.
double distinguishability_bruteforce(const DenseState& state, const SubsystemSet& probe);

// Two-qubit mixed-state concurrence max(0, l1-l2-l3-l4) from the
// square-rooted eigenvalues of rho (sigma_y tensor sigma_y) rho* (...).
double wootters_concurrence(const Matrix& rho);

// Fringe contrast 2|<g|rho|e>| and population imbalance |rho_ee - rho_gg| of
// a single-qubit density operator.
std::pair<double, double> visibility_predictability_bruteforce(const Matrix& rho_source);

// Born projection of every probe atom onto its readout direction; returns
// the normalized post-measurement register state and the outcome
// probability.  Throws when the outcome probability is below 1e-15.
std::pair<DenseState, double> project_bruteforce(const DenseState& state,
                                                 const MeasurementBasis& basis);

}  // namespace qeraser::oracle
