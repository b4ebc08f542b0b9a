#pragma once

#include <string>
#include <vector>

#include "linopt/bigint.hpp"
#include "linopt/distribution.hpp"
#include "linopt/majorization.hpp"

namespace linopt {

// Structural runtime of the best known exact algorithm for repeated rows and
// columns: t_min = min(prod(n_i+1), prod(m_j+1)) * alpha_n * alpha_m, counted
// with O-constant 1 (outer-sum terms times mode work, not wall-clock).
struct RuntimeEstimate {
    Bigint t_min;
    enum class Orientation { Input, Output } orientation; // side supplying the min
    Bigint prod_n;
    Bigint prod_m;
    int alpha_n = 0;
    int alpha_m = 0;
};

RuntimeEstimate runtime_exact(const PhotonDistribution& n, const PhotonDistribution& m);

// Same quantity through the elementary-symmetric-function identity
// prod(n_i + 1) = sum_{k=0}^{alpha} X_k(n); equal to runtime_exact exactly.
RuntimeEstimate runtime_symmetric_form(const PhotonDistribution& n,
                                       const PhotonDistribution& m);

enum class RuntimeRelation { Equal, LeftGE, RightGE, NotDetermined };

const char* to_string(RuntimeRelation r);

// Classifies two majorization-ordered pairs (n1 <= m1), (n2 <= m2) against
// the runtime-relation table and cross-checks the verdict by direct t_min
// evaluation. Pairs must be oriented so n is majorized by (or a permutation
// of) m; anything else is a NotComparablePair error.
RuntimeRelation runtime_compare(const PhotonDistribution& n1, const PhotonDistribution& m1,
                                const PhotonDistribution& n2, const PhotonDistribution& m2);

// Approximate-algorithm runtime with constant 1: N^2/eps^2 when both sides
// are unbunched, N*alpha/eps^2 when exactly one is, alpha_n*alpha_m/eps^2
// otherwise.
double runtime_approx(const PhotonDistribution& n, const PhotonDistribution& m, double eps);

// The fixed nine-partition chain of N = 6 output distributions with the
// input held at (1,1,1,1,1,1): Q and t_min/6 per chain node, both strictly
// increasing toward the unbunched end.
struct Figure4Row {
    int index = 0; // 1-based chain position, most-majorized first
    Partition partition;
    Bigint Q;
    Bigint t_min_over_6;
};

std::vector<Figure4Row> figure4_data();

// CSV with header "index,partition,Q,Tmin_over_6"; partitions '+'-joined.
std::string figure4_csv(const std::vector<Figure4Row>& rows);

} // namespace linopt
