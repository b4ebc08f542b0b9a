#include "linopt/complexity.hpp"

#include <sstream>
#include <stdexcept>

namespace linopt {

namespace {

Bigint term_product(const Partition& p) {
    Bigint prod = 1;
    for (int part : p.parts()) prod *= (part + 1);
    return prod;
}

RuntimeEstimate combine(const Partition& pn, const Partition& pm, const Bigint& prod_n,
                        const Bigint& prod_m) {
    RuntimeEstimate est{};
    est.prod_n = prod_n;
    est.prod_m = prod_m;
    est.alpha_n = pn.length();
    est.alpha_m = pm.length();
    est.orientation = prod_n <= prod_m ? RuntimeEstimate::Orientation::Input
                                       : RuntimeEstimate::Orientation::Output;
    const Bigint& smaller = prod_n <= prod_m ? prod_n : prod_m;
    est.t_min = smaller * est.alpha_n * est.alpha_m;
    return est;
}

void check_weights(const Partition& pn, const Partition& pm) {
    if (pn.weight() != pm.weight()) {
        raise(ErrorCode::WeightMismatch, "runtime comparison requires equal photon numbers");
    }
}

} // namespace

RuntimeEstimate runtime_exact(const PhotonDistribution& n, const PhotonDistribution& m) {
    Partition pn = canonicalize(n);
    Partition pm = canonicalize(m);
    check_weights(pn, pm);
    return combine(pn, pm, term_product(pn), term_product(pm));
}

RuntimeEstimate runtime_symmetric_form(const PhotonDistribution& n,
                                       const PhotonDistribution& m) {
    Partition pn = canonicalize(n);
    Partition pm = canonicalize(m);
    check_weights(pn, pm);
    // prod (n_i + 1) through the elementary symmetric polynomials:
    // sum_{k=0}^{alpha} X_k.
    SchurReport rn = schur_report(n);
    SchurReport rm = schur_report(m);
    Bigint sum_n = 0, sum_m = 0;
    for (const Bigint& x : rn.X) sum_n += x;
    for (const Bigint& x : rm.X) sum_m += x;
    return combine(pn, pm, sum_n, sum_m);
}

const char* to_string(RuntimeRelation r) {
    switch (r) {
        case RuntimeRelation::Equal: return "Equal";
        case RuntimeRelation::LeftGE: return "LeftGE";
        case RuntimeRelation::RightGE: return "RightGE";
        case RuntimeRelation::NotDetermined: return "NotDetermined";
    }
    return "?";
}

RuntimeRelation runtime_compare(const PhotonDistribution& n1, const PhotonDistribution& m1,
                                const PhotonDistribution& n2, const PhotonDistribution& m2) {
    Partition pn1 = canonicalize(n1), pm1 = canonicalize(m1);
    Partition pn2 = canonicalize(n2), pm2 = canonicalize(m2);
    check_weights(pn1, pm1);
    check_weights(pn1, pn2);
    check_weights(pn2, pm2);
    if (!weakly_precedes(pn1, pm1) || !weakly_precedes(pn2, pm2)) {
        raise(ErrorCode::NotComparablePair,
              "each (n, m) pair must be oriented so n is majorized by m");
    }

    RuntimeRelation tag = RuntimeRelation::NotDetermined;
    if (pn1 == pn2 && pm1 == pm2) {
        tag = RuntimeRelation::Equal;
    } else if (weakly_precedes(pm1, pn2)) {
        tag = RuntimeRelation::LeftGE; // n1 <= m1 <= n2 <= m2
    } else if (weakly_precedes(pn1, pn2) && weakly_precedes(pn2, pm1) &&
               weakly_precedes(pm1, pm2)) {
        tag = RuntimeRelation::LeftGE; // n1 <= n2 <= m1 <= m2
    } else if (weakly_precedes(pm2, pn1)) {
        tag = RuntimeRelation::RightGE; // mirrored second row
    } else if (weakly_precedes(pn2, pn1) && weakly_precedes(pn1, pm2) &&
               weakly_precedes(pm2, pm1)) {
        tag = RuntimeRelation::RightGE; // mirrored third row
    }

    // The table must never contradict direct evaluation.
    Bigint t1 = runtime_exact(n1, m1).t_min;
    Bigint t2 = runtime_exact(n2, m2).t_min;
    bool consistent = true;
    if (tag == RuntimeRelation::Equal) consistent = (t1 == t2);
    if (tag == RuntimeRelation::LeftGE) consistent = (t1 >= t2);
    if (tag == RuntimeRelation::RightGE) consistent = (t2 >= t1);
    if (!consistent) {
        throw std::logic_error("runtime relation table contradicted by direct evaluation");
    }
    return tag;
}

double runtime_approx(const PhotonDistribution& n, const PhotonDistribution& m, double eps) {
    if (eps <= 0.0) raise(ErrorCode::ParseError, "epsilon must be positive");
    Partition pn = canonicalize(n);
    Partition pm = canonicalize(m);
    check_weights(pn, pm);
    const double total = double(pn.weight());
    bool n_trivial = pn.parts().front() == 1; // canonical, so all parts equal 1
    bool m_trivial = pm.parts().front() == 1;
    double work = 0.0;
    if (n_trivial && m_trivial) {
        work = total * total;
    } else if (n_trivial) {
        work = total * double(pm.length());
    } else if (m_trivial) {
        work = total * double(pn.length());
    } else {
        work = double(pn.length()) * double(pm.length());
    }
    return work / (eps * eps);
}

std::vector<Figure4Row> figure4_data() {
    // The nine-member output chain of weight 6, most-majorized first, with
    // the input fixed at six single photons.
    static const std::vector<std::vector<int>> chain = {
        {6},       {5, 1},       {4, 2},          {4, 1, 1},          {3, 2, 1},
        {3, 1, 1, 1}, {2, 2, 1, 1}, {2, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1},
    };
    PhotonDistribution input = PhotonDistribution::single_photons(6);
    std::vector<Figure4Row> rows;
    rows.reserve(chain.size());
    for (std::size_t i = 0; i < chain.size(); ++i) {
        PhotonDistribution m{chain[i]};
        SchurReport report = schur_report(m);
        RuntimeEstimate runtime = runtime_exact(input, m);
        Figure4Row row{int(i) + 1, report.partition, report.Q, runtime.t_min / 6};
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string figure4_csv(const std::vector<Figure4Row>& rows) {
    std::ostringstream out;
    out << "index,partition,Q,Tmin_over_6\n";
    for (const Figure4Row& row : rows) {
        out << row.index << ',' << to_string(row.partition) << ',' << row.Q.str() << ','
            << row.t_min_over_6.str() << '\n';
    }
    return out.str();
}

} // namespace linopt
