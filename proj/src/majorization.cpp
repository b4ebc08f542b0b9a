#include "linopt/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

namespace linopt {

namespace {

double log2_factorial(int n) { return std::lgamma(double(n) + 1.0) / std::numbers::ln2_v<double>; }

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 0) raise(ErrorCode::ParseError, "partition parts must be non-negative");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    if (parts_.empty()) raise(ErrorCode::EmptyDistribution, "partition must have positive weight");
    for (int p : parts_) weight_ += p;
}

std::string to_string(const Partition& p) {
    std::ostringstream out;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) out << '+';
        out << p.parts()[i];
    }
    return out.str();
}

Partition canonicalize(const PhotonDistribution& d) {
    if (d.total() == 0) {
        raise(ErrorCode::EmptyDistribution, "cannot canonicalize the zero distribution");
    }
    return Partition(d.occupations());
}

const char* to_string(MajorizationRelation r) {
    switch (r) {
        case MajorizationRelation::EqualUpToPermutation: return "EqualUpToPermutation";
        case MajorizationRelation::LeftMajorized: return "LeftMajorized";
        case MajorizationRelation::RightMajorized: return "RightMajorized";
        case MajorizationRelation::Incomparable: return "Incomparable";
    }
    return "?";
}

MajorizationRelation compare(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) {
        raise(ErrorCode::WeightMismatch, "cannot compare partitions of different weights");
    }
    if (a == b) return MajorizationRelation::EqualUpToPermutation;
    const std::size_t len = std::max(a.parts().size(), b.parts().size());
    bool a_below = true; // every prefix sum of a <= that of b
    bool b_below = true;
    long sum_a = 0, sum_b = 0;
    for (std::size_t k = 0; k < len; ++k) {
        sum_a += a.part(k);
        sum_b += b.part(k);
        if (sum_a > sum_b) a_below = false;
        if (sum_b > sum_a) b_below = false;
    }
    if (a_below) return MajorizationRelation::LeftMajorized;
    if (b_below) return MajorizationRelation::RightMajorized;
    return MajorizationRelation::Incomparable;
}

bool weakly_precedes(const Partition& a, const Partition& b) {
    MajorizationRelation r = compare(a, b);
    return r == MajorizationRelation::LeftMajorized ||
           r == MajorizationRelation::EqualUpToPermutation;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 1) raise(ErrorCode::EmptyDistribution, "partitions require positive weight");
    std::vector<Partition> out;
    std::vector<int> cur{n};
    while (true) {
        out.push_back(Partition(cur));
        // Descending-lexicographic successor: shrink the rightmost part
        // larger than 1, then refill greedily.
        int k = static_cast<int>(cur.size()) - 1;
        while (k >= 0 && cur[k] == 1) --k;
        if (k < 0) break;
        int total = 0;
        for (std::size_t i = std::size_t(k); i < cur.size(); ++i) total += cur[i];
        int head = cur[k] - 1;
        cur.resize(k);
        while (total > 0) {
            int part = std::min(head, total);
            cur.push_back(part);
            total -= part;
        }
    }
    return out;
}

DominanceLattice::DominanceLattice(int weight) : weight_(weight) {
    nodes_ = partitions_of(weight);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < nodes_.size(); ++i) index[nodes_[i].parts()] = int(i);

    up_.assign(nodes_.size(), {});
    down_.assign(nodes_.size(), {});

    for (std::size_t from = 0; from < nodes_.size(); ++from) {
        const std::vector<int>& parts = nodes_[from].parts();
        const int len = static_cast<int>(parts.size());

        // All valid single-box moves upward: take a box from the last row of
        // one value class and put it on the first row of an earlier class.
        std::vector<Partition> candidates;
        for (int i = 0; i < len; ++i) {
            if (i > 0 && parts[i] == parts[i - 1]) continue; // not first of class
            for (int j = i + 1; j < len; ++j) {
                if (j + 1 < len && parts[j] == parts[j + 1]) continue; // not last of class
                std::vector<int> moved = parts;
                moved[i] += 1;
                moved[j] -= 1;
                if (i > 0 && moved[i] > parts[i - 1]) continue;
                if (moved[j] < (j + 1 < len ? parts[j + 1] : 0)) continue;
                candidates.push_back(Partition(std::move(moved)));
            }
        }
        std::sort(candidates.begin(), candidates.end(),
                  [](const Partition& x, const Partition& y) { return x.parts() < y.parts(); });
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        // Keep only covering moves: no other single-box target strictly
        // between the node and the candidate. (Any partition strictly
        // between would dominate some single-box target, so it is enough to
        // test the candidates against each other.)
        for (const Partition& cand : candidates) {
            bool covered = true;
            for (const Partition& other : candidates) {
                if (other == cand) continue;
                MajorizationRelation r = compare(other, cand);
                if (r == MajorizationRelation::LeftMajorized) {
                    covered = false;
                    break;
                }
            }
            if (covered) {
                int to = index.at(cand.parts());
                edges_.emplace_back(int(from), to);
                up_[from].push_back(to);
                down_[to].push_back(int(from));
            }
        }
    }
}

int DominanceLattice::node_index(const Partition& p) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i] == p) return int(i);
    }
    return -1;
}

std::string DominanceLattice::to_dot() const {
    std::ostringstream out;
    out << "digraph dominance {\n  rankdir=BT;\n";
    for (const Partition& p : nodes_) {
        out << "  \"" << to_string(p) << "\";\n";
    }
    for (const auto& [from, to] : edges_) {
        out << "  \"" << to_string(nodes_[from]) << "\" -> \"" << to_string(nodes_[to])
            << "\";\n";
    }
    out << "}\n";
    return out.str();
}

DominanceLattice build_lattice(int weight) {
    if (weight < 1) raise(ErrorCode::EmptyDistribution, "lattice weight must be positive");
    if (weight > 30) {
        raise(ErrorCode::SizeLimit, "dominance lattice limited to weight 30 (" +
                                        std::to_string(weight) + " requested)");
    }
    return DominanceLattice(weight);
}

int majorization_difference(const DominanceLattice& lattice, const Partition& a,
                            const Partition& b) {
    MajorizationRelation rel = compare(a, b);
    if (rel == MajorizationRelation::Incomparable) {
        raise(ErrorCode::IncomparableInput,
              "majorization difference requires comparable partitions");
    }
    if (rel == MajorizationRelation::EqualUpToPermutation) return 0;
    const Partition& lower = rel == MajorizationRelation::LeftMajorized ? a : b;
    const Partition& upper = rel == MajorizationRelation::LeftMajorized ? b : a;
    int start = lattice.node_index(lower);
    int goal = lattice.node_index(upper);
    if (start < 0 || goal < 0) {
        raise(ErrorCode::WeightMismatch, "partitions do not belong to this lattice");
    }
    // BFS along upward cover edges; the first time the goal appears is the
    // shortest covering-move path.
    std::vector<int> dist(lattice.nodes().size(), -1);
    std::deque<int> queue{start};
    dist[start] = 0;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        if (cur == goal) return dist[cur];
        for (int nxt : lattice.upward(cur)) {
            if (dist[nxt] < 0) {
                dist[nxt] = dist[cur] + 1;
                queue.push_back(nxt);
            }
        }
    }
    raise(ErrorCode::IncomparableInput, "no covering path found (internal inconsistency)");
}

int majorization_difference(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) {
        raise(ErrorCode::WeightMismatch, "cannot compare partitions of different weights");
    }
    DominanceLattice lattice = build_lattice(a.weight());
    return majorization_difference(lattice, a, b);
}

double log2_v(const Partition& p) {
    double acc = 0.0;
    for (int part : p.parts()) {
        acc += log2_factorial(part) - double(part) * std::log2(double(part));
    }
    return 0.5 * acc;
}

double delta_entropy(const Partition& p) {
    const double n_total = double(p.weight());
    double s_b = log2_factorial(p.weight());
    double nh = n_total * std::log2(n_total);
    for (int part : p.parts()) {
        s_b -= log2_factorial(part);
        nh -= double(part) * std::log2(double(part));
    }
    return s_b - nh;
}

SchurReport schur_report(const PhotonDistribution& d) {
    SchurReport report{canonicalize(d), {}, 0, 0, 0.0, 0.0, 0.0, 0.0};
    const Partition& p = report.partition;
    report.alpha = p.length();

    // Elementary symmetric polynomials by expanding prod (1 + n_i t): exact
    // integer coefficients, X_0 = 1.
    report.X.assign(std::size_t(report.alpha) + 1, Bigint(0));
    report.X[0] = 1;
    std::size_t filled = 0;
    for (int part : p.parts()) {
        ++filled;
        for (std::size_t k = filled; k >= 1; --k) {
            report.X[k] += Bigint(part) * report.X[k - 1];
        }
    }

    report.Q = factorial(unsigned(p.weight()));
    for (int part : p.parts()) report.Q /= factorial(unsigned(part));

    const double n_total = double(p.weight());
    double h = 0.0;
    for (int part : p.parts()) {
        double frac = double(part) / n_total;
        h -= frac * std::log2(frac);
    }
    report.H = h;
    report.S_B = log2_factorial(p.weight());
    for (int part : p.parts()) report.S_B -= log2_factorial(part);
    report.delta_S = report.S_B - n_total * h;
    report.v = std::exp2(log2_v(p));
    return report;
}

} // namespace linopt
