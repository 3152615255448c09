#pragma once

#include <vector>

#include "quigs/state.hpp"

namespace quigs {

// Hermitian, unit-trace, positive-semidefinite matrix for reduced states.
// Construction validates all three properties (eigenvalues ≥ −kStructuralTol).
class DensityMatrix {
public:
    DensityMatrix(Matrix entries, std::vector<Index> subsystem_dims = {});

    static DensityMatrix from_state(const StateVector& s);

    Index dim() const { return entries_.rows(); }
    const Matrix& matrix() const { return entries_; }
    const std::vector<Index>& subsystem_dims() const { return subsystem_dims_; }

    // Real spectrum in descending order, with values in [−kStructuralTol, 0)
    // clamped to zero.
    std::vector<double> eigenvalues() const;

    // Von Neumann entropy in bits, with 0·log 0 := 0.
    double entropy_bits() const;

private:
    Matrix entries_;
    std::vector<Index> subsystem_dims_;
};

// Standard partial trace keeping the listed subsystems (ascending order).
DensityMatrix partial_trace(const StateVector& s, const std::vector<std::size_t>& keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep);

// Entanglement entropy in bits across the bipartition (cut = kept side).
double entanglement_entropy(const StateVector& s, const std::vector<std::size_t>& cut);

struct SchmidtResult {
    bool separable;
    std::vector<double> coefficients;  // singular values, descending
};

// Schmidt decomposition across the bipartition; `separable` holds exactly
// when one coefficient is nonzero (within kStructuralTol). Two-subsystem
// states may omit the cut (defaults to {0}); larger systems must name it.
SchmidtResult schmidt_separability(const StateVector& s, std::vector<std::size_t> cut = {});

// Entanglement negativity across the bipartition: the absolute sum of the
// negative eigenvalues of the partial transpose.
double negativity(const StateVector& s, const std::vector<std::size_t>& cut);

}  // namespace quigs
