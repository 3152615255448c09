#pragma once

#include <initializer_list>
#include <vector>

#include "quigs/linalg.hpp"

namespace quigs {

// Normalized complex amplitude vector over a tensor-product Hilbert space.
// Immutable after construction; the subsystem dimension list records how the
// flat index factorizes (subsystem 0 most significant).
class StateVector {
public:
    // Validates normalization (within kStructuralTol) and that the subsystem
    // dimensions multiply out to the amplitude count.
    StateVector(Vector amplitudes, std::vector<Index> subsystem_dims);

    // Renormalizes `amplitudes` first; rejects (near-)zero vectors.
    static StateVector normalized(Vector amplitudes, std::vector<Index> subsystem_dims);

    // Basis state |index⟩ for the given factorization.
    static StateVector basis(std::vector<Index> subsystem_dims, Index index);

    // Single qubit α|0⟩ + β|1⟩ (must be normalized).
    static StateVector qubit(Complex a0, Complex a1);

    Index dim() const { return amplitudes_.size(); }
    const Vector& amplitudes() const { return amplitudes_; }
    Complex amplitude(Index i) const { return amplitudes_(i); }
    const std::vector<Index>& subsystem_dims() const { return subsystem_dims_; }
    std::size_t num_subsystems() const { return subsystem_dims_.size(); }

    double norm() const { return amplitudes_.norm(); }

    // ⟨this|other⟩
    Complex inner(const StateVector& other) const;

    // Reinterprets the same amplitudes under a different factorization.
    StateVector reshaped(std::vector<Index> subsystem_dims) const;

private:
    Vector amplitudes_;
    std::vector<Index> subsystem_dims_;
};

StateVector tensor(const StateVector& a, const StateVector& b);

// |⟨a|b⟩|²; insensitive to global phase.
double fidelity(const StateVector& a, const StateVector& b);

// Entrywise equality up to a single global phase factor.
bool equal_up_to_global_phase(const StateVector& a, const StateVector& b,
                              double tol = kStructuralTol);

// Common single-qubit states. In the path encoding |0⟩ is the arm ending at
// the first detector; in the spin encoding it is spin-up along z.
StateVector ket0();
StateVector ket1();
StateVector ket_plus();   // (|0⟩+|1⟩)/√2, also spin-up along x
StateVector ket_minus();  // (|0⟩−|1⟩)/√2, also spin-down along x

}  // namespace quigs
