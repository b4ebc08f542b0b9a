#include "linopt/matrix.hpp"

#include <cmath>

#include "linopt/rng.hpp"

namespace linopt {

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<cplx>>& rows) {
    std::size_t dim = rows.size();
    if (dim == 0) raise(ErrorCode::DimensionMismatch, "matrix must have at least one row");
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (rows[i].size() != dim) {
            raise(ErrorCode::DimensionMismatch, "matrix rows must all have length equal to the row count");
        }
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = rows[i][j];
    }
    if (!m.all_finite()) raise(ErrorCode::ParseError, "matrix entries must be finite");
    return m;
}

ComplexMatrix ComplexMatrix::transposed() const {
    ComplexMatrix t(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

ComplexMatrix ComplexMatrix::scaled(cplx factor) const {
    ComplexMatrix s(dim_);
    for (std::size_t k = 0; k < data_.size(); ++k) s.data_[k] = data_[k] * factor;
    return s;
}

bool ComplexMatrix::all_finite() const {
    for (const cplx& z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

double unitarity_defect(const ComplexMatrix& a) {
    const std::size_t d = a.dim();
    double defect = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            cplx g = 0.0;
            for (std::size_t k = 0; k < d; ++k) g += a(i, k) * std::conj(a(j, k));
            if (i == j) g -= 1.0;
            defect = std::max(defect, std::abs(g));
        }
    }
    return defect;
}

ComplexMatrix expand_submatrix(const ComplexMatrix& u, const PhotonDistribution& n,
                               const PhotonDistribution& m) {
    const std::size_t modes = u.dim();
    if (n.modes() != modes || m.modes() != modes) {
        raise(ErrorCode::DimensionMismatch, "distribution length must equal the matrix dimension");
    }
    if (n.total() != m.total()) {
        raise(ErrorCode::DimensionMismatch, "input and output distributions must hold the same photon number");
    }
    if (n.total() == 0) raise(ErrorCode::EmptyDistribution, "photon number must be at least 1");

    std::vector<std::size_t> row_of, col_of;
    for (std::size_t i = 0; i < modes; ++i) {
        for (int r = 0; r < n[i]; ++r) row_of.push_back(i);
    }
    for (std::size_t j = 0; j < modes; ++j) {
        for (int c = 0; c < m[j]; ++c) col_of.push_back(j);
    }
    ComplexMatrix sub(row_of.size());
    for (std::size_t a = 0; a < row_of.size(); ++a) {
        for (std::size_t b = 0; b < col_of.size(); ++b) {
            sub(a, b) = u(row_of[a], col_of[b]);
        }
    }
    return sub;
}

ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed) {
    if (dim == 0) raise(ErrorCode::DimensionMismatch, "matrix dimension must be positive");
    CounterRng rng(mix64(seed, 0x756e6974617279ull)); // sub-stream tag
    ComplexMatrix a(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) a(i, j) = rng.next_complex_gaussian();
    }

    // Modified Gram-Schmidt on the columns, two passes for orthogonality at
    // the rounding floor. The triangular factor's diagonal comes out real
    // and positive, which is exactly the phase fixing that makes the
    // orthonormalized Gaussian Haar-distributed.
    for (std::size_t j = 0; j < dim; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                cplx ip = 0.0;
                for (std::size_t r = 0; r < dim; ++r) ip += std::conj(a(r, k)) * a(r, j);
                for (std::size_t r = 0; r < dim; ++r) a(r, j) -= ip * a(r, k);
            }
        }
        double norm2 = 0.0;
        for (std::size_t r = 0; r < dim; ++r) norm2 += std::norm(a(r, j));
        double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t r = 0; r < dim; ++r) a(r, j) *= inv;
    }
    return a;
}

double largest_singular_value(const ComplexMatrix& a) {
    const std::size_t d = a.dim();
    std::vector<cplx> v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = cplx(1.0 + 0.25 / double(i + 1), 0.0);
    double sigma2 = 0.0;
    std::vector<cplx> w(d), u(d);
    for (int iter = 0; iter < 200; ++iter) {
        for (std::size_t i = 0; i < d; ++i) {
            cplx s = 0.0;
            for (std::size_t j = 0; j < d; ++j) s += a(i, j) * v[j];
            w[i] = s;
        }
        double wn = 0.0;
        for (std::size_t i = 0; i < d; ++i) wn += std::norm(w[i]);
        for (std::size_t j = 0; j < d; ++j) {
            cplx s = 0.0;
            for (std::size_t i = 0; i < d; ++i) s += std::conj(a(i, j)) * w[i];
            u[j] = s;
        }
        double un = 0.0;
        for (std::size_t j = 0; j < d; ++j) un += std::norm(u[j]);
        if (un == 0.0) return 0.0;
        double inv = 1.0 / std::sqrt(un);
        for (std::size_t j = 0; j < d; ++j) v[j] = u[j] * inv;
        double next = wn; // |Av|^2 with ||v|| = 1
        if (iter > 4 && std::abs(next - sigma2) <= 1e-14 * std::max(1.0, next)) {
            sigma2 = next;
            break;
        }
        sigma2 = next;
    }
    return std::sqrt(sigma2);
}

} // namespace linopt
