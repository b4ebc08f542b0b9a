#include "linopt/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "linopt/compensated.hpp"
#include "linopt/majorization.hpp"
#include "linopt/permanent.hpp"
#include "linopt/rng.hpp"

namespace linopt {

namespace {

// The additive guarantee holds for operator norm <= 1. Unitaries pass
// unchanged; anything larger is scaled down for sampling and the estimate is
// scaled back on return (the bound still refers to the normalized matrix).
double norm_scale(const ComplexMatrix& a) {
    double sigma = largest_singular_value(a);
    return sigma > 1.0 + 1e-9 ? sigma : 1.0;
}

double derived_epsilon(std::uint64_t samples, double epsilon) {
    // samples = ceil(10 / eps^2) inverted when no target was given.
    return epsilon > 0.0 ? epsilon : std::sqrt(10.0 / double(samples));
}

struct SampledAxis {
    std::vector<int> modes;
    std::vector<int> mult;
    std::vector<std::vector<cplx>> roots;
    std::vector<std::vector<cplx>> phase; // conj(z)^mult per digit
    double orderings = 1.0;               // prod mult!
};

SampledAxis make_axis(const PhotonDistribution& d) {
    SampledAxis axis;
    for (std::size_t i = 0; i < d.modes(); ++i) {
        if (d[i] > 0) {
            axis.modes.push_back(int(i));
            axis.mult.push_back(d[i]);
        }
    }
    axis.roots.resize(axis.modes.size());
    axis.phase.resize(axis.modes.size());
    for (std::size_t i = 0; i < axis.modes.size(); ++i) {
        int q = axis.mult[i] + 1;
        axis.roots[i].resize(q);
        axis.phase[i].resize(q);
        for (int dgt = 0; dgt < q; ++dgt) {
            double ang = 2.0 * std::numbers::pi_v<double> * double(dgt) / double(q);
            axis.roots[i][dgt] = {std::cos(ang), std::sin(ang)};
        }
        for (int dgt = 0; dgt < q; ++dgt) {
            axis.phase[i][dgt] = std::conj(axis.roots[i][(dgt * axis.mult[i]) % q]);
        }
        double f = 1.0;
        for (int k = 2; k <= axis.mult[i]; ++k) f *= double(k);
        axis.orderings *= f;
    }
    return axis;
}

std::uint64_t axis_terms(const SampledAxis& axis) {
    std::uint64_t prod = 1;
    for (int w : axis.mult) {
        if (prod > (1ull << 62) / std::uint64_t(w + 1)) return 1ull << 62;
        prod *= std::uint64_t(w + 1);
    }
    return prod;
}

} // namespace

double error_bound(const PhotonDistribution& n, const PhotonDistribution& m, double eps) {
    if (eps <= 0.0) raise(ErrorCode::ParseError, "epsilon must be positive");
    Partition pn = canonicalize(n);
    Partition pm = canonicalize(m);
    if (pn.weight() != pm.weight()) {
        raise(ErrorCode::WeightMismatch, "error bound requires equal photon numbers");
    }
    if (pn == pm) return eps;
    return eps * std::exp2(-std::abs(log2_v(pn) - log2_v(pm)));
}

double error_bound_entropy(const PhotonDistribution& n, const PhotonDistribution& m,
                           double eps) {
    if (eps <= 0.0) raise(ErrorCode::ParseError, "epsilon must be positive");
    Partition pn = canonicalize(n);
    Partition pm = canonicalize(m);
    if (pn.weight() != pm.weight()) {
        raise(ErrorCode::WeightMismatch, "error bound requires equal photon numbers");
    }
    if (pn == pm) return eps;
    return eps * std::exp2(-0.5 * std::abs(delta_entropy(pn) - delta_entropy(pm)));
}

double error_bound_stirling(const PhotonDistribution& n, const PhotonDistribution& m,
                            double eps) {
    if (eps <= 0.0) raise(ErrorCode::ParseError, "epsilon must be positive");
    Partition pn = canonicalize(n);
    Partition pm = canonicalize(m);
    if (pn.weight() != pm.weight()) {
        raise(ErrorCode::WeightMismatch, "error bound requires equal photon numbers");
    }
    if (pn.length() != pm.length()) {
        raise(ErrorCode::SupportMismatch,
              "the Stirling form pairs occupations index-wise and needs equal support sizes");
    }
    double exponent = 0.0;
    for (int i = 0; i < pn.length(); ++i) {
        exponent += 0.25 * std::log2(double(pm.part(i)) / double(pn.part(i)));
    }
    return eps * std::exp2(-std::abs(exponent));
}

EstimateResult gurvits_estimate(const ComplexMatrix& a, std::uint64_t samples,
                                std::uint64_t seed, double epsilon) {
    const int n = int(a.dim());
    if (n > 64) raise(ErrorCode::SizeLimit, "gurvits_estimate is limited to 64x64");
    if (samples == 0) raise(ErrorCode::ParseError, "sample count must be positive");

    double scale = norm_scale(a);
    ComplexMatrix b = scale != 1.0 ? a.scaled(1.0 / scale) : a;
    double eps_eff = derived_epsilon(samples, epsilon);

    cplx mean;
    if (n <= 30 && samples == (1ull << n)) {
        mean = per_glynn(b).value; // exhaustive: the average over all sign vectors
    } else {
        ComplexCompensatedSum acc;
        std::vector<cplx> x(n);
        for (std::uint64_t s = 0; s < samples; ++s) {
            CounterRng rng(mix64(seed, s));
            double sign = 1.0;
            for (int c = 0; c < n; ++c) {
                if (rng.next_below(2)) {
                    x[c] = -1.0;
                    sign = -sign;
                } else {
                    x[c] = 1.0;
                }
            }
            cplx prod = sign;
            for (int r = 0; r < n; ++r) {
                cplx row = 0.0;
                for (int c = 0; c < n; ++c) row += b(r, c) * x[c];
                prod *= row;
            }
            acc.add(prod);
        }
        mean = acc.value() / double(samples);
    }
    cplx estimate = mean * std::pow(scale, n);
    return {estimate, samples, seed, eps_eff, eps_eff};
}

EstimateResult generalized_estimate(const ComplexMatrix& u, const PhotonDistribution& n,
                                    const PhotonDistribution& m, std::uint64_t samples,
                                    std::uint64_t seed, double epsilon) {
    if (n.modes() != u.dim() || m.modes() != u.dim()) {
        raise(ErrorCode::DimensionMismatch, "distribution length must equal the matrix dimension");
    }
    if (n.total() != m.total()) {
        raise(ErrorCode::WeightMismatch, "input and output distributions must hold the same photon number");
    }
    if (n.total() == 0) raise(ErrorCode::EmptyDistribution, "photon number must be at least 1");
    if (n.total() > 64) raise(ErrorCode::SizeLimit, "generalized_estimate is limited to N <= 64");
    if (samples == 0) raise(ErrorCode::ParseError, "sample count must be positive");

    double scale = norm_scale(u);
    ComplexMatrix b = scale != 1.0 ? u.scaled(1.0 / scale) : u;
    double eps_eff = derived_epsilon(samples, epsilon);
    double bound = error_bound(n, m, eps_eff);
    const int photons = n.total();

    // Same orientation rule as per_roots_of_unity: roots on whichever side
    // has the smaller term product.
    SampledAxis zn = make_axis(n);
    SampledAxis zm = make_axis(m);
    bool z_on_input = axis_terms(zn) <= axis_terms(zm);
    const SampledAxis& z = z_on_input ? zn : zm;
    const SampledAxis& p = z_on_input ? zm : zn;
    std::uint64_t full_terms = axis_terms(z);

    cplx mean;
    if (photons <= 30 && full_terms <= (1ull << 30) && samples == full_terms) {
        mean = per_roots_of_unity(b, n, m).value;
    } else {
        const std::size_t k = z.modes.size();
        const std::size_t l = p.modes.size();
        std::vector<cplx> coef(k * l);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < l; ++j) {
                coef[i * l + j] = z_on_input ? b(z.modes[i], p.modes[j])
                                             : b(p.modes[j], z.modes[i]);
            }
        }
        ComplexCompensatedSum acc;
        std::vector<int> digit(k);
        for (std::uint64_t s = 0; s < samples; ++s) {
            CounterRng rng(mix64(seed, s));
            cplx term = z.orderings;
            for (std::size_t i = 0; i < k; ++i) {
                digit[i] = int(rng.next_below(std::uint64_t(z.mult[i]) + 1));
                term *= z.phase[i][digit[i]];
            }
            for (std::size_t j = 0; j < l; ++j) {
                cplx sum = 0.0;
                for (std::size_t i = 0; i < k; ++i) {
                    sum += coef[i * l + j] * z.roots[i][digit[i]];
                }
                cplx pw = sum;
                for (int e = 1; e < p.mult[j]; ++e) pw *= sum;
                term *= pw;
            }
            acc.add(term);
        }
        mean = acc.value() / double(samples);
    }
    cplx estimate = mean * std::pow(scale, photons);
    return {estimate, samples, seed, eps_eff, bound};
}

} // namespace linopt
