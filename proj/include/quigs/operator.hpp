#pragma once

#include "quigs/linalg.hpp"
#include "quigs/state.hpp"

namespace quigs {

// Square complex matrix with an optional structural certification. The
// certifying factories verify their claim at construction, so a certified
// operator can be trusted downstream without re-checking.
class Operator {
public:
    enum class Certification { none, unitary, hermitian };

    // Verifies U†U = 𝟙 entrywise within kStructuralTol.
    static Operator unitary(Matrix entries);

    // Verifies M = M† entrywise within kStructuralTol.
    static Operator hermitian(Matrix entries);

    static Operator uncertified(Matrix entries);

    Index dim() const { return entries_.rows(); }
    const Matrix& matrix() const { return entries_; }
    Certification certification() const { return certification_; }
    bool is_unitary() const { return certification_ == Certification::unitary; }
    bool is_hermitian() const { return certification_ == Certification::hermitian; }

    // Adjoint preserves the certification.
    Operator adjoint() const;

private:
    Operator(Matrix entries, Certification certification);

    Matrix entries_;
    Certification certification_;
};

Operator tensor(const Operator& a, const Operator& b);

// Matrix product b∘a as "apply a, then b". Unitary certifications propagate;
// everything else degrades to uncertified.
Operator compose(const Operator& later, const Operator& earlier);

// op must be certified unitary; the result is not renormalized and its norm
// is health-checked against kNormDriftTol.
StateVector apply(const Operator& op, const StateVector& s);

// Raw matrix-vector product without unitarity or norm requirements. Used by
// post-selection and non-certified matrix identities; the caller owns
// renormalization.
Vector unnormalized_apply(const Operator& op, const StateVector& s);

// ⟨s|obs|s⟩ for a certified-Hermitian observable; the (tiny) imaginary part
// is discarded.
double expectation(const StateVector& s, const Operator& obs);

Operator identity_op(Index dim);
Operator pauli_x();
Operator pauli_y();
Operator pauli_z();
Operator hadamard();

// Hermitian versions of the Pauli matrices for use as ±1-outcome observables.
Operator pauli_x_obs();
Operator pauli_z_obs();

}  // namespace quigs
