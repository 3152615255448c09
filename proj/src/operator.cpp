#include "quigs/operator.hpp"

#include <cmath>
#include <string>

#include "quigs/errors.hpp"

namespace quigs {

namespace {

void check_square(const Matrix& m) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        throw ShapeError("operator matrix must be square and non-empty");
    }
}

}  // namespace

Operator::Operator(Matrix entries, Certification certification)
    : entries_(std::move(entries)), certification_(certification) {}

Operator Operator::unitary(Matrix entries) {
    check_square(entries);
    const Matrix gram = entries.adjoint() * entries;
    const Matrix id = Matrix::Identity(entries.rows(), entries.cols());
    if (!approx_equal(gram, id, kStructuralTol)) {
        throw ContractError("matrix failed the unitarity check U†U = 1");
    }
    return Operator(std::move(entries), Certification::unitary);
}

Operator Operator::hermitian(Matrix entries) {
    check_square(entries);
    if (!approx_equal(entries, entries.adjoint(), kStructuralTol)) {
        throw ContractError("matrix failed the hermiticity check M = M†");
    }
    return Operator(std::move(entries), Certification::hermitian);
}

Operator Operator::uncertified(Matrix entries) {
    check_square(entries);
    return Operator(std::move(entries), Certification::none);
}

Operator Operator::adjoint() const {
    return Operator(entries_.adjoint(), certification_);
}

Operator tensor(const Operator& a, const Operator& b) {
    Matrix m = kron(a.matrix(), b.matrix());
    if (a.is_unitary() && b.is_unitary()) return Operator::unitary(std::move(m));
    if (a.is_hermitian() && b.is_hermitian()) return Operator::hermitian(std::move(m));
    return Operator::uncertified(std::move(m));
}

Operator compose(const Operator& later, const Operator& earlier) {
    if (later.dim() != earlier.dim()) {
        throw ShapeError("composed operators must share a dimension");
    }
    Matrix m = later.matrix() * earlier.matrix();
    if (later.is_unitary() && earlier.is_unitary()) return Operator::unitary(std::move(m));
    return Operator::uncertified(std::move(m));
}

StateVector apply(const Operator& op, const StateVector& s) {
    if (op.dim() != s.dim()) {
        throw ShapeError("operator/state dimension mismatch in apply");
    }
    if (!op.is_unitary()) {
        throw ContractError(
            "apply requires a certified-unitary operator; use unnormalized_apply otherwise");
    }
    Vector out = op.matrix() * s.amplitudes();
    const double n = out.norm();
    if (std::abs(n - 1.0) > kNormDriftTol) {
        throw NumericalError("norm drifted to " + std::to_string(n) + " after apply");
    }
    return StateVector(std::move(out), s.subsystem_dims());
}

Vector unnormalized_apply(const Operator& op, const StateVector& s) {
    if (op.dim() != s.dim()) {
        throw ShapeError("operator/state dimension mismatch in unnormalized_apply");
    }
    return op.matrix() * s.amplitudes();
}

double expectation(const StateVector& s, const Operator& obs) {
    if (obs.dim() != s.dim()) {
        throw ShapeError("observable/state dimension mismatch in expectation");
    }
    if (!obs.is_hermitian()) {
        throw ContractError("expectation requires a certified-Hermitian observable");
    }
    const Complex value = s.amplitudes().dot(obs.matrix() * s.amplitudes());
    return value.real();
}

Operator identity_op(Index dim) {
    return Operator::unitary(Matrix::Identity(dim, dim));
}

namespace {

Matrix pauli_x_matrix() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Matrix pauli_y_matrix() {
    Matrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}

Matrix pauli_z_matrix() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

}  // namespace

Operator pauli_x() { return Operator::unitary(pauli_x_matrix()); }
Operator pauli_y() { return Operator::unitary(pauli_y_matrix()); }
Operator pauli_z() { return Operator::unitary(pauli_z_matrix()); }

Operator hadamard() {
    const double r = 1.0 / std::sqrt(2.0);
    Matrix m(2, 2);
    m << r, r, r, -r;
    return Operator::unitary(std::move(m));
}

Operator pauli_x_obs() { return Operator::hermitian(pauli_x_matrix()); }
Operator pauli_z_obs() { return Operator::hermitian(pauli_z_matrix()); }

}  // namespace quigs
