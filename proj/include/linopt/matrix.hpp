#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "linopt/distribution.hpp"
#include "linopt/errors.hpp"

namespace linopt {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major, immutable in spirit: operations on
// it are pure functions returning new values. Entries must stay finite; the
// validated factory paths (from_rows, JSON) enforce that.
class ComplexMatrix {
  public:
    explicit ComplexMatrix(std::size_t dim)
        : dim_(dim), data_(dim * dim, cplx{0.0, 0.0}) {
        if (dim == 0) raise(ErrorCode::DimensionMismatch, "matrix dimension must be positive");
    }

    static ComplexMatrix identity(std::size_t dim);

    // Validating factory: rows must form a square array of finite entries.
    static ComplexMatrix from_rows(const std::vector<std::vector<cplx>>& rows);

    std::size_t dim() const { return dim_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    cplx operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    const std::vector<cplx>& entries() const { return data_; }

    ComplexMatrix transposed() const;
    ComplexMatrix scaled(cplx factor) const;

    bool all_finite() const;

    bool operator==(const ComplexMatrix& other) const = default;

  private:
    std::size_t dim_;
    std::vector<cplx> data_;
};

// Max-norm of A*conj(A)^T - I. Zero means exactly unitary. Total on any
// square matrix; the permanent algorithms themselves accept arbitrary
// matrices and never require unitarity.
double unitarity_defect(const ComplexMatrix& a);

// The repeated-index submatrix of the scattering amplitude: row i of `u`
// appears n_i times and column j appears m_j times, in mode order. For
// n = m = (1,...,1) this returns `u` itself.
ComplexMatrix expand_submatrix(const ComplexMatrix& u, const PhotonDistribution& n,
                               const PhotonDistribution& m);

// Haar-like random unitary: orthonormalize a complex Gaussian matrix with the
// triangular factor's diagonal phase fixed real-positive. Deterministic per
// seed; unitarity_defect of the result is at the rounding floor (<= 1e-12).
ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed);

// Largest singular value via power iteration on A^H A (deterministic start).
double largest_singular_value(const ComplexMatrix& a);

} // namespace linopt
