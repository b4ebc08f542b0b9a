#pragma once

#include <string>
#include <utility>
#include <vector>

#include "linopt/bigint.hpp"
#include "linopt/distribution.hpp"
#include "linopt/errors.hpp"

namespace linopt {

// Canonical integer partition: nonincreasing positive parts (a Young
// diagram). Photon distributions are compared modulo permutation and
// zero-padding, so they map onto partitions before any order comparison.
class Partition {
  public:
    // Sorts nonincreasing and strips zeros; rejects negative parts and the
    // empty result.
    explicit Partition(std::vector<int> parts);

    static Partition of(std::initializer_list<int> parts) {
        return Partition(std::vector<int>(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }                      // N
    int length() const { return static_cast<int>(parts_.size()); } // alpha

    // Part at position i, zero-padded beyond the length.
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    PhotonDistribution to_distribution() const { return PhotonDistribution(parts_); }

    bool operator==(const Partition& other) const { return parts_ == other.parts_; }

  private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// "3+2+1" form, used by the CSV and DOT exports.
std::string to_string(const Partition& p);

Partition canonicalize(const PhotonDistribution& d);

enum class MajorizationRelation {
    EqualUpToPermutation,
    LeftMajorized,  // a is majorized by b (a precedes b in the dominance order)
    RightMajorized, // b is majorized by a
    Incomparable,
};

const char* to_string(MajorizationRelation r);

// Sorted prefix-sum dominance test between two partitions of the same weight.
MajorizationRelation compare(const Partition& a, const Partition& b);

inline MajorizationRelation compare(const PhotonDistribution& a, const PhotonDistribution& b) {
    return compare(canonicalize(a), canonicalize(b));
}

// True when `a` is majorized by `b` or equal to it up to permutation.
bool weakly_precedes(const Partition& a, const Partition& b);

// All partitions of n, descending-lexicographic, starting from (n).
std::vector<Partition> partitions_of(int n);

// Dominance order on the partitions of one integer. Nodes are listed in
// descending-lexicographic order; cover edges (from, to) mean node `to` is
// built from node `from` by a single covering box move upward, i.e.
// nodes[from] is majorized by nodes[to] with nothing strictly between.
class DominanceLattice {
  public:
    explicit DominanceLattice(int weight);

    int weight() const { return weight_; }
    const std::vector<Partition>& nodes() const { return nodes_; }
    const std::vector<std::pair<int, int>>& cover_edges() const { return edges_; }

    int node_index(const Partition& p) const; // -1 when absent

    // Cover neighbours one step up / one step down from node i.
    const std::vector<int>& upward(int i) const { return up_[i]; }
    const std::vector<int>& downward(int i) const { return down_[i]; }

    std::string to_dot() const;

  private:
    int weight_;
    std::vector<Partition> nodes_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> up_;
    std::vector<std::vector<int>> down_;
};

// Guarded constructor; partition counts stay desk-scale for weight <= 30.
DominanceLattice build_lattice(int weight);

// Number of covering box moves on a shortest path between two comparable
// partitions; 0 iff they are equal. Incomparable inputs are an error.
int majorization_difference(const Partition& a, const Partition& b);
int majorization_difference(const DominanceLattice& lattice, const Partition& a,
                            const Partition& b);

// Evaluated Schur-concave bundle for one distribution. X holds the exact
// elementary symmetric polynomial values X_0..X_alpha of the nonzero
// occupations; Q is the multinomial N!/prod(n_i!); S_B = log2 Q,
// H = -sum (n_i/N) log2(n_i/N), delta_S = S_B - N*H; v = prod
// sqrt(n_i!/n_i^{n_i}). Logarithmic fields are computed through lgamma so
// they stay finite far beyond the range where Q fits a double.
struct SchurReport {
    Partition partition;
    std::vector<Bigint> X;
    int alpha = 0;
    Bigint Q;
    double v = 0.0;
    double H = 0.0;
    double S_B = 0.0;
    double delta_S = 0.0;
};

SchurReport schur_report(const PhotonDistribution& d);

// log2 of v(n) = prod sqrt(n_i!/n_i^{n_i}); shared with the error bounds.
double log2_v(const Partition& p);

// delta_S = S_B - N*H computed directly in log space.
double delta_entropy(const Partition& p);

} // namespace linopt
