#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "linopt/distribution.hpp"
#include "linopt/matrix.hpp"

namespace linopt {

enum class Algorithm {
    Naive,        // permutation sum, the oracle (N <= 10)
    Ryser,        // inclusion-exclusion over column subsets, Gray order
    Glynn,        // sign-vector average, Gray order
    RepeatedCols, // roots-of-unity sum for a column-repeated matrix
    RootsOfUnity, // roots-of-unity sum for repeated rows and columns
    KanSeries,    // binomial-weighted series for repeated rows and columns
};

const char* to_string(Algorithm a);

struct PermanentResult {
    cplx value;
    Algorithm algorithm;
    std::uint64_t term_count; // outer-sum terms of the formula as evaluated
};

// Opt-in parallelism for the dense exponential sums (Ryser/Glynn): the index
// range is split into `threads` contiguous chunks with per-chunk compensated
// accumulators combined in chunk order, so a given thread count is
// bit-reproducible run to run. Default 1 keeps results identical to the
// sequential definition.
struct PermanentOptions {
    unsigned threads = 1;
};

// Direct permutation sum; the independent oracle the exponential-sum
// algorithms are tested against. Guarded at N <= 10 to stay sub-second.
PermanentResult per_naive(const ComplexMatrix& a);

PermanentResult per_ryser(const ComplexMatrix& a, const PermanentOptions& opts = {});
PermanentResult per_glynn(const ComplexMatrix& a, const PermanentOptions& opts = {});

// Permanent of the matrix built from `u` by repeating column j of u n_j
// times, all rows kept once (so sum(n) must equal dim(u)). Outer sum runs
// over the product of roots-of-unity sets R[n_j + 1].
PermanentResult per_repeated_cols(const ComplexMatrix& u, const PhotonDistribution& n);

// Permanent of expand_submatrix(u, n, m) by the generalized roots-of-unity
// sum. The enumeration runs over whichever of n/m has the smaller
// prod(n_i + 1), i.e. the min(...) orientation of the runtime model;
// term_count reports exactly that product.
PermanentResult per_roots_of_unity(const ComplexMatrix& u, const PhotonDistribution& n,
                                   const PhotonDistribution& m);

// Permanent of expand_submatrix(u, n, m) by the binomial series with
// row weights n_i - 2 v_i and sign (-1)^{sum v_i}, prefactor 1/2^N.
// Auto-orients like per_roots_of_unity (via transposition).
PermanentResult per_kan_series(const ComplexMatrix& u, const PhotonDistribution& n,
                               const PhotonDistribution& m);

// Scattering amplitude <m|U|n> = Per([U]_{n,m}) / sqrt(prod n_i! m_i!).
struct Amplitude {
    cplx value;
    cplx permanent;
    double normalization; // sqrt(prod n_i! m_i!)
};

Amplitude amplitude(const ComplexMatrix& u, const PhotonDistribution& n,
                    const PhotonDistribution& m, Algorithm algo = Algorithm::RootsOfUnity,
                    const PermanentOptions& opts = {});

// All output states m with sum(m) = sum(n) and their transition
// probabilities |<m|U|n>|^2. Guarded by the output-state count.
std::vector<std::pair<PhotonDistribution, double>>
output_distribution(const ComplexMatrix& u, const PhotonDistribution& n,
                    Algorithm algo = Algorithm::RootsOfUnity);

// All compositions of `total` photons into `modes` modes, lexicographically
// descending from (total, 0, ..., 0).
std::vector<PhotonDistribution> enumerate_distributions(int total, std::size_t modes);

} // namespace linopt
