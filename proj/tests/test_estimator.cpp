#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <numbers>

#include "linopt/estimator.hpp"
#include "linopt/majorization.hpp"
#include "linopt/permanent.hpp"
#include "test_helpers.hpp"

using namespace linopt;
using testutil::random_distribution;
using testutil::random_matrix;
using testutil::rel_err;

namespace {

// Independent evaluation of v(n) = prod sqrt(n_i!/n_i^{n_i}) with exact
// factorials, for freezing expected bound values.
double v_of(const std::vector<int>& parts) {
    long double acc = 1.0L;
    for (int p : parts) {
        long double f = 1.0L;
        for (int k = 2; k <= p; ++k) f *= k;
        acc *= std::sqrt(f / std::pow((long double)p, p));
    }
    return double(acc);
}

} // namespace

TEST_CASE("error_bound: anchored values") {
    PhotonDistribution n11{{1, 1}}, m20{{2, 0}};
    CHECK(error_bound(n11, m20, 1.0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));
    CHECK(error_bound(n11, m20, 1.0) == doctest::Approx(0.70711).epsilon(1e-4));

    // (1,1,1,1) vs (4,0,0,0): eps * sqrt(4!/4^4)
    PhotonDistribution ones4 = PhotonDistribution::single_photons(4);
    PhotonDistribution four{{4, 0, 0, 0}};
    CHECK(error_bound(ones4, four, 1.0) ==
          doctest::Approx(std::sqrt(24.0 / 256.0)).epsilon(1e-9));
    CHECK(error_bound(ones4, four, 1.0) == doctest::Approx(0.30619).epsilon(1e-4));

    // Equal partitions saturate the bound at eps, exactly.
    PhotonDistribution a{{3, 1}}, b{{1, 0, 3}};
    CHECK(error_bound(a, b, 0.37) == 0.37);

    // Fully bunched vs fully spread at N = 8: sqrt(8!/8^8), and the
    // large-N trend v ~ (2 pi N)^(1/4) e^(-N/2) is already within 1%.
    PhotonDistribution ones8 = PhotonDistribution::single_photons(8);
    PhotonDistribution eight{{8, 0, 0, 0, 0, 0, 0, 0}};
    double exact = error_bound(ones8, eight, 1.0);
    CHECK(exact == doctest::Approx(v_of({8})).epsilon(1e-10));
    CHECK(exact == doctest::Approx(0.049023).epsilon(1e-4));
    double trend = std::pow(2.0 * std::numbers::pi * 8.0, 0.25) * std::exp(-4.0);
    CHECK(exact == doctest::Approx(trend).epsilon(0.01));
}

TEST_CASE("error_bound: symmetry, ceiling and equality condition") {
    for (int n = 2; n <= 8; ++n) {
        auto parts = partitions_of(n);
        for (const Partition& a : parts) {
            for (const Partition& b : parts) {
                double e = error_bound(a.to_distribution(), b.to_distribution(), 1.0);
                double e_swapped = error_bound(b.to_distribution(), a.to_distribution(), 1.0);
                CHECK(e == e_swapped);
                CHECK(e <= 1.0);
                if (a == b) {
                    CHECK(e == 1.0);
                } else {
                    CHECK(e < 1.0);
                }
            }
        }
    }
    CHECK_THROWS_AS(error_bound(PhotonDistribution{{2}}, PhotonDistribution{{3}}, 1.0), Error);
    CHECK_THROWS_AS(error_bound(PhotonDistribution{{2}}, PhotonDistribution{{2}}, 0.0), Error);
}

TEST_CASE("error_bound_entropy: matches the direct form") {
    PhotonDistribution n11{{1, 1}}, m20{{2, 0}};
    CHECK(error_bound_entropy(n11, m20, 1.0) == doctest::Approx(0.70711).epsilon(1e-4));
    CHECK(error_bound_entropy(n11, n11, 0.25) == 0.25);

    PhotonDistribution ones6 = PhotonDistribution::single_photons(6);
    PhotonDistribution six{{6, 0, 0, 0, 0, 0}};
    CHECK(error_bound_entropy(ones6, six, 0.5) ==
          doctest::Approx(0.5 * std::sqrt(720.0 / 46656.0)).epsilon(1e-9));

    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        int total = 1 + int(seed % 20);
        PhotonDistribution a = random_distribution(total, 1 + seed % 6, 3 * seed);
        PhotonDistribution b = random_distribution(total, 1 + (seed + 2) % 6, 3 * seed + 1);
        double direct = error_bound(a, b, 1.0);
        double entropy = error_bound_entropy(a, b, 1.0);
        CHECK(std::abs(direct - entropy) <= 1e-9 * direct);
    }
}

TEST_CASE("error_bound_stirling: quartic-root approximation") {
    PhotonDistribution n{{64, 64}}, m{{96, 32}};
    double approx = error_bound_stirling(n, m, 1.0);
    CHECK(approx == doctest::Approx(std::pow(0.75, 0.25)).epsilon(1e-12));
    CHECK(approx == doctest::Approx(0.9306).epsilon(1e-4));
    double exact = error_bound(n, m, 1.0);
    CHECK(std::abs(approx - exact) <= 0.10 * exact); // inside the validity domain

    // n = m gives exactly eps.
    CHECK(error_bound_stirling(n, n, 0.7) == 0.7);

    // Small occupations: same quartic-root value, visibly off the exact
    // bound (about 1.3% here) though not outside 10%.
    PhotonDistribution small_n{{2, 2}}, small_m{{3, 1}};
    double small_approx = error_bound_stirling(small_n, small_m, 1.0);
    CHECK(small_approx == doctest::Approx(std::pow(0.75, 0.25)).epsilon(1e-12));
    double small_exact = error_bound(small_n, small_m, 1.0);
    CHECK(small_exact == doctest::Approx(v_of({3, 1}) / v_of({2, 2})).epsilon(1e-10));
    CHECK(std::abs(small_approx - small_exact) > 1e-3);

    CHECK_THROWS_AS(error_bound_stirling(PhotonDistribution{{1, 1}}, PhotonDistribution{{2, 0}}, 1.0),
                    Error); // support lengths differ
}

TEST_CASE("gurvits_estimate: exhaustive mode equals Glynn") {
    for (std::size_t dim = 1; dim <= 6; ++dim) {
        ComplexMatrix u = random_unitary(dim, 900 + dim);
        EstimateResult r = gurvits_estimate(u, 1ull << dim, 1);
        CHECK(rel_err(r.estimate, per_glynn(u).value) <= 1e-10);
        CHECK(r.bound == r.epsilon);
    }
    ComplexMatrix m = random_matrix(2, 77);
    cplx want = m(0, 0) * m(1, 1) + m(0, 1) * m(1, 0);
    CHECK(rel_err(gurvits_estimate(m, 4, 1).estimate, want) <= 1e-10);
}

TEST_CASE("gurvits_estimate: deterministic and finite") {
    ComplexMatrix u = random_unitary(4, 13);
    EstimateResult a = gurvits_estimate(u, 250, 42, 0.2);
    EstimateResult b = gurvits_estimate(u, 250, 42, 0.2);
    CHECK(std::memcmp(&a.estimate, &b.estimate, sizeof a.estimate) == 0);
    CHECK(a.epsilon == 0.2);
    CHECK(a.bound == 0.2);
    EstimateResult single = gurvits_estimate(u, 1, 7);
    CHECK(std::isfinite(single.estimate.real()));
    CHECK(std::isfinite(single.estimate.imag()));
    CHECK(gurvits_estimate(u, 250, 43, 0.2).estimate != a.estimate);
}

TEST_CASE("gurvits_estimate: epsilon derived from the sample budget") {
    ComplexMatrix u = random_unitary(3, 5);
    EstimateResult r = gurvits_estimate(u, 1000, 0);
    CHECK(r.epsilon == doctest::Approx(std::sqrt(10.0 / 1000.0)).epsilon(1e-12));
}

TEST_CASE("gurvits_estimate: matrices beyond unit norm are scaled") {
    // All-ones 4x4: largest singular value 4, permanent 24. The additive
    // guarantee applies to the normalized matrix, so the un-normalized
    // estimate carries a 4^4 scale.
    ComplexMatrix ones(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) ones(i, j) = 1.0;
    EstimateResult r = gurvits_estimate(ones, 100000, 1, 0.1);
    CHECK(std::abs(r.estimate - cplx{24.0, 0.0}) <= 0.1 * 256.0);
    CHECK(std::abs(r.estimate - cplx{24.0, 0.0}) <= 3.0); // frozen-seed sanity margin
}

TEST_CASE("generalized_estimate: exhaustive mode equals the exact sum") {
    // Smallest reduction: n = m = (1,1) on a 2x2, full enumeration gives the
    // permanent exactly.
    ComplexMatrix m2 = random_matrix(2, 81);
    PhotonDistribution ones2 = PhotonDistribution::single_photons(2);
    cplx perm = m2(0, 0) * m2(1, 1) + m2(0, 1) * m2(1, 0);
    CHECK(rel_err(generalized_estimate(m2, ones2, ones2, 4, 9).estimate, perm) <= 1e-10);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        std::size_t modes = 2 + seed % 3;
        int photons = 1 + int(seed % 6);
        ComplexMatrix u = random_unitary(modes, 1000 + seed);
        PhotonDistribution n = random_distribution(photons, modes, 5 * seed);
        PhotonDistribution m = random_distribution(photons, modes, 5 * seed + 2);
        PermanentResult exact = per_roots_of_unity(u, n, m);
        EstimateResult r = generalized_estimate(u, n, m, exact.term_count, 3);
        CHECK(rel_err(r.estimate, exact.value) <= 1e-10);
    }
}

TEST_CASE("generalized_estimate: sampling converges and reports the bound") {
    ComplexMatrix u = random_unitary(3, 19);
    PhotonDistribution n{{1, 1, 1}}, m{{2, 1, 0}};
    cplx exact = per_roots_of_unity(u, n, m).value;
    EstimateResult r = generalized_estimate(u, n, m, 200000, 11, 0.25);
    CHECK(std::abs(r.estimate - exact) <= 0.02); // well inside the 0.25-scale bound
    CHECK(r.bound == doctest::Approx(error_bound(n, m, 0.25)).epsilon(1e-12));
    CHECK(r.bound < r.epsilon);

    EstimateResult again = generalized_estimate(u, n, m, 200000, 11, 0.25);
    CHECK(std::memcmp(&r.estimate, &again.estimate, sizeof r.estimate) == 0);
}

TEST_CASE("estimator coverage at eps = 0.2 (reduced trial count)") {
    // The acceptance suite runs the full 100-trial version.
    int hits = 0;
    for (std::uint64_t t = 0; t < 20; ++t) {
        ComplexMatrix u = random_unitary(4, 4000 + t);
        EstimateResult r = gurvits_estimate(u, 250, t, 0.2);
        if (std::abs(r.estimate - per_naive(u).value) <= r.bound) ++hits;
    }
    CHECK(hits >= 18);
}

TEST_CASE("monotonicity of the bound along majorization chains") {
    // Shared lower end: larger upper end means smaller bound.
    PhotonDistribution n{{1, 1, 1, 1}};
    PhotonDistribution m1{{2, 1, 1, 0}}, m2{{2, 2, 0, 0}}, m3{{4, 0, 0, 0}};
    double e1 = error_bound(n, m1, 1.0);
    double e2 = error_bound(n, m2, 1.0);
    double e3 = error_bound(n, m3, 1.0);
    CHECK(e1 >= e2);
    CHECK(e2 >= e3);
    // Shared upper end: larger lower end means larger bound.
    double f1 = error_bound(m1, m3, 1.0);
    double f2 = error_bound(m2, m3, 1.0);
    CHECK(f1 <= f2);
}
