// Independent reference implementations used to check the library. These
// deliberately take different routes than the code under test: explicit
// digit arithmetic instead of the shared index helpers, closed-form spectra
// instead of numerical solvers, and textbook statistics for Monte Carlo
// bounds.
#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "quigs/linalg.hpp"
#include "quigs/rng.hpp"
#include "quigs/state.hpp"

namespace oracles {

inline double binomial_sigma(double n, double p) { return std::sqrt(n * p * (1.0 - p)); }

// |count − n·p| ≤ k·σ, with a half-count floor so p ∈ {0,1} stays checkable.
inline bool within_k_sigma(double count, double n, double p, double k) {
    const double sigma = binomial_sigma(n, p);
    return std::abs(count - n * p) <= std::max(k * sigma, 0.5);
}

// Digit of `flat` at subsystem `pos` (subsystem 0 most significant),
// computed from scratch with local strides.
inline long digit_at(long flat, std::size_t pos, const std::vector<long>& dims) {
    long stride = 1;
    for (std::size_t q = pos + 1; q < dims.size(); ++q) stride *= dims[q];
    return (flat / stride) % dims[pos];
}

// Partial trace by brute force over the full outer product: accumulate
// every pair of amplitudes whose dropped digits agree.
inline quigs::Matrix naive_partial_trace(const quigs::Vector& amps,
                                         const std::vector<long>& dims,
                                         const std::vector<std::size_t>& keep) {
    long kept_dim = 1;
    for (std::size_t k : keep) kept_dim *= dims[k];
    auto reduced_index = [&](long flat) {
        long idx = 0;
        for (std::size_t k : keep) idx = idx * dims[k] + digit_at(flat, k, dims);
        return idx;
    };
    auto dropped_match = [&](long f1, long f2) {
        for (std::size_t q = 0; q < dims.size(); ++q) {
            if (std::find(keep.begin(), keep.end(), q) != keep.end()) continue;
            if (digit_at(f1, q, dims) != digit_at(f2, q, dims)) return false;
        }
        return true;
    };
    quigs::Matrix rho = quigs::Matrix::Zero(kept_dim, kept_dim);
    for (long i = 0; i < amps.size(); ++i) {
        for (long j = 0; j < amps.size(); ++j) {
            if (dropped_match(i, j)) {
                rho(reduced_index(i), reduced_index(j)) += amps(i) * std::conj(amps(j));
            }
        }
    }
    return rho;
}

inline std::vector<double> hermitian_eigenvalues(const quigs::Matrix& m) {
    Eigen::SelfAdjointEigenSolver<quigs::Matrix> solver(m, Eigen::EigenvaluesOnly);
    std::vector<double> values(solver.eigenvalues().data(),
                               solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

inline double binary_entropy_bits(double p) {
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
    return h;
}

// Closed-form spectrum of either reduced state of
// (|00⟩+|01⟩+|10⟩+e^{iφ}|11⟩)/2: the 2×2 amplitude matrix M = [[1,1],[1,e^{iφ}]]/2
// has MM† = [[2, 1+e^{−iφ}],[1+e^{iφ}, 2]]/4, whose eigenvalues are
// (1 ± |cos(φ/2)|)/2.
inline std::pair<double, double> gie_reduced_eigenvalues(double phi) {
    const double c = std::abs(std::cos(phi / 2.0));
    return {(1.0 + c) / 2.0, (1.0 - c) / 2.0};
}

inline double gie_entropy_bits(double phi) {
    return binary_entropy_bits(gie_reduced_eigenvalues(phi).first);
}

// Negativity of the same state: product of its two Schmidt coefficients,
// √(λ₊λ₋) = |sin(φ/2)|/2.
inline double gie_negativity(double phi) { return std::abs(std::sin(phi / 2.0)) / 2.0; }

inline double gaussian(quigs::RngStream& rng) {
    const double u1 = 1.0 - rng.next_unit();
    const double u2 = rng.next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

inline quigs::Vector random_complex_vector(quigs::RngStream& rng, long dim) {
    quigs::Vector v(dim);
    for (long i = 0; i < dim; ++i) v(i) = quigs::Complex(gaussian(rng), gaussian(rng));
    return v;
}

inline quigs::StateVector random_state(quigs::RngStream& rng, std::vector<quigs::Index> dims) {
    long dim = 1;
    for (auto d : dims) dim *= d;
    return quigs::StateVector::normalized(random_complex_vector(rng, dim), std::move(dims));
}

// Unitary from the QR factorization of a Gaussian matrix.
inline quigs::Matrix random_unitary_matrix(quigs::RngStream& rng, long dim) {
    quigs::Matrix g(dim, dim);
    for (long i = 0; i < dim; ++i) {
        for (long j = 0; j < dim; ++j) g(i, j) = quigs::Complex(gaussian(rng), gaussian(rng));
    }
    Eigen::HouseholderQR<quigs::Matrix> qr(g);
    return qr.householderQ();
}

}  // namespace oracles
