#include "quigs/linalg.hpp"

#include "quigs/errors.hpp"

namespace quigs {

namespace {

void check_capacity(Index rows_a, Index rows_b) {
    if (rows_a > 0 && rows_b > kMaxDim / rows_a) {
        throw CapacityError("tensor product dimension exceeds the configured maximum");
    }
}

}  // namespace

Matrix kron(const Matrix& a, const Matrix& b) {
    check_capacity(a.rows(), b.rows());
    check_capacity(a.cols(), b.cols());
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Vector kron(const Vector& a, const Vector& b) {
    check_capacity(a.size(), b.size());
    Vector out(a.size() * b.size());
    for (Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

std::vector<Index> index_to_digits(Index flat, const std::vector<Index>& dims) {
    std::vector<Index> digits(dims.size());
    for (std::size_t k = dims.size(); k-- > 0;) {
        digits[k] = flat % dims[k];
        flat /= dims[k];
    }
    return digits;
}

Index digits_to_index(const std::vector<Index>& digits, const std::vector<Index>& dims) {
    Index flat = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        flat = flat * dims[k] + digits[k];
    }
    return flat;
}

}  // namespace quigs
