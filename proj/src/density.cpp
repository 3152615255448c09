#include "quigs/density.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <string>

#include "quigs/errors.hpp"

namespace quigs {

namespace {

Index product(const std::vector<Index>& dims) {
    Index p = 1;
    for (Index d : dims) p *= d;
    return p;
}

// Bookkeeping for splitting a mixed-radix index into kept and discarded
// subsystem groups (both keep their relative order).
struct Bipartition {
    std::vector<Index> full_dims;
    std::vector<std::size_t> keep;
    std::vector<std::size_t> drop;
    std::vector<Index> keep_dims;
    std::vector<Index> drop_dims;
    Index keep_dim = 1;
    Index drop_dim = 1;

    Index merge(Index keep_flat, Index drop_flat) const {
        const std::vector<Index> kd = index_to_digits(keep_flat, keep_dims);
        const std::vector<Index> dd =
            drop_dims.empty() ? std::vector<Index>{} : index_to_digits(drop_flat, drop_dims);
        std::vector<Index> digits(full_dims.size());
        for (std::size_t i = 0; i < keep.size(); ++i) digits[keep[i]] = kd[i];
        for (std::size_t i = 0; i < drop.size(); ++i) digits[drop[i]] = dd[i];
        return digits_to_index(digits, full_dims);
    }
};

Bipartition make_bipartition(const std::vector<Index>& dims, std::vector<std::size_t> keep) {
    if (keep.empty()) throw ShapeError("subsystem keep-set must be non-empty");
    std::sort(keep.begin(), keep.end());
    if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
        throw ShapeError("duplicate subsystem index in keep-set");
    }
    if (keep.back() >= dims.size()) {
        throw ShapeError("subsystem index " + std::to_string(keep.back()) + " out of range");
    }
    Bipartition b;
    b.full_dims = dims;
    b.keep = std::move(keep);
    for (std::size_t i = 0, k = 0; i < dims.size(); ++i) {
        if (k < b.keep.size() && b.keep[k] == i) {
            b.keep_dims.push_back(dims[i]);
            b.keep_dim *= dims[i];
            ++k;
        } else {
            b.drop.push_back(i);
            b.drop_dims.push_back(dims[i]);
            b.drop_dim *= dims[i];
        }
    }
    return b;
}

}  // namespace

DensityMatrix::DensityMatrix(Matrix entries, std::vector<Index> subsystem_dims)
    : entries_(std::move(entries)), subsystem_dims_(std::move(subsystem_dims)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
        throw ShapeError("density matrix must be square and non-empty");
    }
    if (subsystem_dims_.empty()) subsystem_dims_ = {entries_.rows()};
    if (product(subsystem_dims_) != entries_.rows()) {
        throw ShapeError("density matrix dimension does not match the subsystem dimensions");
    }
    if (!approx_equal(entries_, entries_.adjoint(), kStructuralTol)) {
        throw ContractError("density matrix is not Hermitian");
    }
    const double tr = entries_.trace().real();
    if (std::abs(tr - 1.0) > kStructuralTol) {
        throw ContractError("density matrix trace is " + std::to_string(tr));
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(entries_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -kStructuralTol) {
        throw ContractError("density matrix has a negative eigenvalue " +
                            std::to_string(solver.eigenvalues().minCoeff()));
    }
}

DensityMatrix DensityMatrix::from_state(const StateVector& s) {
    return DensityMatrix(s.amplitudes() * s.amplitudes().adjoint(), s.subsystem_dims());
}

std::vector<double> DensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(entries_, Eigen::EigenvaluesOnly);
    std::vector<double> values(solver.eigenvalues().data(),
                               solver.eigenvalues().data() + solver.eigenvalues().size());
    for (double& v : values) {
        if (v < 0.0 && v >= -kStructuralTol) v = 0.0;
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

double DensityMatrix::entropy_bits() const {
    double entropy = 0.0;
    for (double lambda : eigenvalues()) {
        if (lambda > 0.0) entropy -= lambda * std::log2(lambda);
    }
    return std::max(entropy, 0.0);
}

DensityMatrix partial_trace(const StateVector& s, const std::vector<std::size_t>& keep) {
    const Bipartition b = make_bipartition(s.subsystem_dims(), keep);
    Matrix reduced = Matrix::Zero(b.keep_dim, b.keep_dim);
    for (Index i = 0; i < b.keep_dim; ++i) {
        for (Index j = 0; j < b.keep_dim; ++j) {
            Complex sum = 0.0;
            for (Index t = 0; t < b.drop_dim; ++t) {
                sum += s.amplitude(b.merge(i, t)) * std::conj(s.amplitude(b.merge(j, t)));
            }
            reduced(i, j) = sum;
        }
    }
    return DensityMatrix(std::move(reduced), b.keep_dims);
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep) {
    const Bipartition b = make_bipartition(rho.subsystem_dims(), keep);
    Matrix reduced = Matrix::Zero(b.keep_dim, b.keep_dim);
    for (Index i = 0; i < b.keep_dim; ++i) {
        for (Index j = 0; j < b.keep_dim; ++j) {
            Complex sum = 0.0;
            for (Index t = 0; t < b.drop_dim; ++t) {
                sum += rho.matrix()(b.merge(i, t), b.merge(j, t));
            }
            reduced(i, j) = sum;
        }
    }
    return DensityMatrix(std::move(reduced), b.keep_dims);
}

double entanglement_entropy(const StateVector& s, const std::vector<std::size_t>& cut) {
    const DensityMatrix reduced = partial_trace(s, cut);
    const Index d_a = reduced.dim();
    const Index d_b = s.dim() / d_a;
    const double bound = std::log2(static_cast<double>(std::min(d_a, d_b)));
    const double entropy = reduced.entropy_bits();
    if (entropy > bound + kStructuralTol) {
        throw NumericalError("entanglement entropy " + std::to_string(entropy) +
                             " exceeds the Schmidt bound " + std::to_string(bound));
    }
    return std::min(entropy, bound);
}

SchmidtResult schmidt_separability(const StateVector& s, std::vector<std::size_t> cut) {
    if (cut.empty()) {
        if (s.num_subsystems() != 2) {
            throw ContractError(
                "schmidt_separability needs an explicit cut for more than two subsystems");
        }
        cut = {0};
    }
    const Bipartition b = make_bipartition(s.subsystem_dims(), cut);
    if (b.drop.empty()) {
        throw ShapeError("schmidt cut must leave at least one subsystem on each side");
    }
    Matrix coefficient_matrix(b.keep_dim, b.drop_dim);
    for (Index i = 0; i < b.keep_dim; ++i) {
        for (Index j = 0; j < b.drop_dim; ++j) {
            coefficient_matrix(i, j) = s.amplitude(b.merge(i, j));
        }
    }
    Eigen::JacobiSVD<Matrix> svd(coefficient_matrix);
    SchmidtResult result;
    result.coefficients.assign(svd.singularValues().data(),
                               svd.singularValues().data() + svd.singularValues().size());
    std::size_t nonzero = 0;
    for (double c : result.coefficients) {
        if (c > kStructuralTol) ++nonzero;
    }
    result.separable = (nonzero == 1);
    return result;
}

double negativity(const StateVector& s, const std::vector<std::size_t>& cut) {
    const Bipartition b = make_bipartition(s.subsystem_dims(), cut);
    if (b.drop.empty()) {
        throw ShapeError("negativity cut must leave at least one subsystem on each side");
    }
    const Matrix rho = s.amplitudes() * s.amplitudes().adjoint();
    // Partial transpose over the kept side: swap its row/column digits.
    Matrix pt(rho.rows(), rho.cols());
    for (Index ik = 0; ik < b.keep_dim; ++ik) {
        for (Index id = 0; id < b.drop_dim; ++id) {
            for (Index jk = 0; jk < b.keep_dim; ++jk) {
                for (Index jd = 0; jd < b.drop_dim; ++jd) {
                    pt(b.merge(ik, id), b.merge(jk, jd)) = rho(b.merge(jk, id), b.merge(ik, jd));
                }
            }
        }
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(pt, Eigen::EigenvaluesOnly);
    double negative_sum = 0.0;
    for (Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const double lambda = solver.eigenvalues()(i);
        if (lambda < 0.0) negative_sum -= lambda;
    }
    return negative_sum;
}

}  // namespace quigs
