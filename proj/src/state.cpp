#include "quigs/state.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "quigs/errors.hpp"

namespace quigs {

namespace {

Index dims_product(const std::vector<Index>& dims) {
    Index product = 1;
    for (Index d : dims) {
        if (d <= 0) throw ShapeError("subsystem dimensions must be positive");
        if (product > kMaxDim / d) {
            throw CapacityError("state dimension exceeds the configured maximum");
        }
        product *= d;
    }
    return product;
}

}  // namespace

StateVector::StateVector(Vector amplitudes, std::vector<Index> subsystem_dims)
    : amplitudes_(std::move(amplitudes)), subsystem_dims_(std::move(subsystem_dims)) {
    if (subsystem_dims_.empty()) {
        subsystem_dims_ = {amplitudes_.size()};
    }
    if (dims_product(subsystem_dims_) != amplitudes_.size()) {
        throw ShapeError("amplitude count does not match the subsystem dimensions");
    }
    const double n = amplitudes_.norm();
    if (std::abs(n - 1.0) > kStructuralTol) {
        throw ContractError("state vector is not normalized (norm = " + std::to_string(n) + ")");
    }
}

StateVector StateVector::normalized(Vector amplitudes, std::vector<Index> subsystem_dims) {
    const double n = amplitudes.norm();
    if (n < 1e-300) {
        throw ContractError("cannot normalize a zero state vector");
    }
    return StateVector(amplitudes / n, std::move(subsystem_dims));
}

StateVector StateVector::basis(std::vector<Index> subsystem_dims, Index index) {
    const Index d = dims_product(subsystem_dims);
    if (index < 0 || index >= d) throw ShapeError("basis index out of range");
    Vector v = Vector::Zero(d);
    v(index) = 1.0;
    return StateVector(std::move(v), std::move(subsystem_dims));
}

StateVector StateVector::qubit(Complex a0, Complex a1) {
    Vector v(2);
    v << a0, a1;
    return StateVector(std::move(v), {2});
}

Complex StateVector::inner(const StateVector& other) const {
    if (dim() != other.dim()) throw ShapeError("inner product dimension mismatch");
    return amplitudes_.dot(other.amplitudes_);
}

StateVector StateVector::reshaped(std::vector<Index> subsystem_dims) const {
    return StateVector(amplitudes_, std::move(subsystem_dims));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    std::vector<Index> dims = a.subsystem_dims();
    dims.insert(dims.end(), b.subsystem_dims().begin(), b.subsystem_dims().end());
    return StateVector(kron(a.amplitudes(), b.amplitudes()), std::move(dims));
}

double fidelity(const StateVector& a, const StateVector& b) {
    return std::norm(a.inner(b));
}

bool equal_up_to_global_phase(const StateVector& a, const StateVector& b, double tol) {
    if (a.dim() != b.dim()) return false;
    const Complex overlap = a.inner(b);
    if (std::abs(overlap) <= tol) {
        return a.amplitudes().norm() <= tol && b.amplitudes().norm() <= tol;
    }
    const Complex phase = overlap / std::abs(overlap);
    return approx_equal(Vector(phase * a.amplitudes()), b.amplitudes(), tol);
}

StateVector ket0() { return StateVector::basis({2}, 0); }
StateVector ket1() { return StateVector::basis({2}, 1); }

StateVector ket_plus() {
    const double r = 1.0 / std::sqrt(2.0);
    return StateVector::qubit(r, r);
}

StateVector ket_minus() {
    const double r = 1.0 / std::sqrt(2.0);
    return StateVector::qubit(r, -r);
}

}  // namespace quigs
