#pragma once

#include <cstdint>

#include "linopt/distribution.hpp"
#include "linopt/matrix.hpp"

namespace linopt {

// Output of the randomized permanent estimators. `bound` is the theoretical
// additive error guarantee eps * min(v_n/v_m, v_m/v_n) for the requested
// precision parameter; it never exceeds eps. The guarantee applies to
// matrices of operator norm <= 1 (unitaries qualify automatically); other
// matrices are normalized by their largest singular value internally and the
// returned estimate is scaled back.
struct EstimateResult {
    cplx estimate;
    std::uint64_t samples;
    std::uint64_t seed;
    double epsilon;
    double bound;
};

// Sample mean of Glynn sign-vector terms over uniform x in {-1,1}^N.
// Unbiased for Per(a). Passing samples == 2^N switches to exhaustive
// enumeration, which reproduces per_glynn exactly. When epsilon is omitted
// it is derived from the sample budget via samples = ceil(10/eps^2).
EstimateResult gurvits_estimate(const ComplexMatrix& a, std::uint64_t samples,
                                std::uint64_t seed, double epsilon = 0.0);

// Sample mean of generalized roots-of-unity terms over uniform z in
// R[w_1+1] x ... x R[w_k+1] (w = the cheaper of n/m, as in
// per_roots_of_unity). Unbiased for Per(expand_submatrix(u, n, m)); passing
// samples equal to the full product switches to exhaustive enumeration.
EstimateResult generalized_estimate(const ComplexMatrix& u, const PhotonDistribution& n,
                                    const PhotonDistribution& m, std::uint64_t samples,
                                    std::uint64_t seed, double epsilon = 0.0);

// Additive error bound eps * min(v_n/v_m, v_m/v_n). Symmetric in (n, m);
// equals eps exactly iff the two distributions agree up to permutation.
double error_bound(const PhotonDistribution& n, const PhotonDistribution& m, double eps);

// Same bound through the entropy form eps * 2^{(dS(n) - dS(m))/2} with the
// exponent oriented non-positive; algebraically identical to error_bound.
double error_bound_entropy(const PhotonDistribution& n, const PhotonDistribution& m,
                           double eps);

// Large-occupation approximation eps * prod (m_i/n_i)^{1/4} over the sorted
// supports, oriented to the smaller value. Requires equal support lengths;
// accurate to within 10% of error_bound once every occupation is >= 32.
double error_bound_stirling(const PhotonDistribution& n, const PhotonDistribution& m,
                            double eps);

} // namespace linopt
