#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace quigs {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

// Tolerance for structural invariants (normalization, unitarity,
// hermiticity, projector algebra).
inline constexpr double kStructuralTol = 1e-9;

// Allowed norm drift after applying a certified-unitary operator.
inline constexpr double kNormDriftTol = 1e-6;

// Hard cap on tensor-product dimensions.
inline constexpr Index kMaxDim = Index{1} << 20;

inline bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return (a - b).cwiseAbs().maxCoeff() <= tol;
}

inline bool approx_equal(const Vector& a, const Vector& b, double tol) {
    if (a.size() != b.size()) return false;
    return (a - b).cwiseAbs().maxCoeff() <= tol;
}

// Kronecker product with the left factor most significant.
Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

// Mixed-radix index helpers for subsystem bookkeeping. Subsystem 0 is the
// most significant digit, matching the tensor-product convention above.
std::vector<Index> index_to_digits(Index flat, const std::vector<Index>& dims);
Index digits_to_index(const std::vector<Index>& digits, const std::vector<Index>& dims);

}  // namespace quigs
