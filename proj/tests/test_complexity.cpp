#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "linopt/complexity.hpp"
#include "linopt/permanent.hpp"
#include "test_helpers.hpp"

using namespace linopt;

TEST_CASE("runtime_exact: anchored values") {
    PhotonDistribution ones6 = PhotonDistribution::single_photons(6);
    CHECK(runtime_exact(ones6, ones6).t_min == 2304); // 2^6 * 36

    PhotonDistribution six{{6, 0, 0, 0, 0, 0}};
    RuntimeEstimate bunched = runtime_exact(ones6, six);
    CHECK(bunched.t_min == 42); // min(64, 7) * 6 * 1
    CHECK(bunched.orientation == RuntimeEstimate::Orientation::Output);
    CHECK(bunched.prod_n == 64);
    CHECK(bunched.prod_m == 7);
    CHECK(bunched.alpha_n == 6);
    CHECK(bunched.alpha_m == 1);

    PhotonDistribution two{{2, 0}};
    CHECK(runtime_exact(two, two).t_min == 3); // min(3,3) * 1 * 1

    CHECK_THROWS_AS(runtime_exact(PhotonDistribution{{2}}, PhotonDistribution{{3}}), Error);
}

TEST_CASE("runtime_exact: special cases of the minimal-runtime model") {
    // Unbunched output: prod (n_k + 1) * alpha_n * N.
    PhotonDistribution n{{3, 2, 0, 0, 0}};
    PhotonDistribution m{{1, 1, 1, 1, 1}};
    RuntimeEstimate est = runtime_exact(n, m);
    CHECK(est.t_min == Bigint(4 * 3) * 2 * 5);
    // Both unbunched: 2^N * N^2 for N = 2..8.
    for (int n_photons = 2; n_photons <= 8; ++n_photons) {
        PhotonDistribution ones = PhotonDistribution::single_photons(n_photons);
        CHECK(runtime_exact(ones, ones).t_min ==
              (Bigint(1) << n_photons) * n_photons * n_photons);
    }
}

TEST_CASE("runtime_symmetric_form equals runtime_exact exactly") {
    SUBCASE("anchored identities") {
        PhotonDistribution n{{2, 1}}, m{{1, 1, 1}};
        RuntimeEstimate a = runtime_exact(n, m);
        RuntimeEstimate b = runtime_symmetric_form(n, m);
        CHECK(a.t_min == b.t_min);
        CHECK(b.prod_n == 6); // sum_k X_k(2,1) = 1 + 3 + 2

        PhotonDistribution single{{4, 0}};
        CHECK(runtime_symmetric_form(single, single).prod_n == 5); // N + 1

        PhotonDistribution ones4 = PhotonDistribution::single_photons(4);
        CHECK(runtime_exact(ones4, ones4).t_min == 256);
        CHECK(runtime_symmetric_form(ones4, ones4).t_min == 256);
    }
    SUBCASE("all partition pairs up to N = 12") {
        for (int n = 1; n <= 12; ++n) {
            auto parts = partitions_of(n);
            for (const Partition& a : parts) {
                for (const Partition& b : parts) {
                    RuntimeEstimate direct = runtime_exact(a.to_distribution(), b.to_distribution());
                    RuntimeEstimate viaX =
                        runtime_symmetric_form(a.to_distribution(), b.to_distribution());
                    CHECK(direct.t_min == viaX.t_min);
                    CHECK(direct.prod_n == viaX.prod_n);
                    CHECK(direct.prod_m == viaX.prod_m);
                }
            }
        }
    }
}

TEST_CASE("runtime_exact is symmetric in (n, m)") {
    PhotonDistribution n{{3, 1, 0}}, m{{2, 2, 0}};
    CHECK(runtime_exact(n, m).t_min == runtime_exact(m, n).t_min);
}

TEST_CASE("runtime schur monotonicity for n = sigma(m)") {
    for (int n = 2; n <= 12; ++n) {
        auto parts = partitions_of(n);
        for (const Partition& a : parts) {
            for (const Partition& b : parts) {
                if (compare(a, b) != MajorizationRelation::LeftMajorized) continue;
                Bigint ta = runtime_exact(a.to_distribution(), a.to_distribution()).t_min;
                Bigint tb = runtime_exact(b.to_distribution(), b.to_distribution()).t_min;
                CHECK(ta > tb);
            }
        }
    }
}

TEST_CASE("runtime_compare: table rows") {
    PhotonDistribution ones4 = PhotonDistribution::single_photons(4);
    SUBCASE("row 1: equal pairs up to permutation") {
        PhotonDistribution n1{{1, 1, 2}}, m1{{2, 2, 0}};
        PhotonDistribution n2{{2, 1, 1}}, m2{{0, 2, 2}};
        CHECK(runtime_compare(n1, m1, n2, m2) == RuntimeRelation::Equal);
    }
    SUBCASE("row 2: chained pairs") {
        PhotonDistribution n1 = ones4, m1{{2, 1, 1, 0}};
        PhotonDistribution n2{{2, 2, 0, 0}}, m2{{3, 1, 0, 0}};
        CHECK(runtime_compare(n1, m1, n2, m2) == RuntimeRelation::LeftGE);
        // Direct t_min values behind the relation: 144 >= 32.
        CHECK(runtime_exact(n1, m1).t_min == 144);
        CHECK(runtime_exact(n2, m2).t_min == 32);
        // Mirrored arguments flip the verdict.
        CHECK(runtime_compare(n2, m2, n1, m1) == RuntimeRelation::RightGE);
    }
    SUBCASE("row 3: interleaved pairs") {
        PhotonDistribution n1 = ones4, m1{{2, 2, 0, 0}};
        PhotonDistribution n2{{2, 1, 1, 0}}, m2{{4, 0, 0, 0}};
        CHECK(runtime_compare(n1, m1, n2, m2) == RuntimeRelation::LeftGE);
    }
    SUBCASE("row 4: nested pairs are not determined") {
        PhotonDistribution n1 = ones4, m1{{4, 0, 0, 0}};
        PhotonDistribution n2{{2, 1, 1, 0}}, m2{{2, 2, 0, 0}};
        CHECK(runtime_compare(n1, m1, n2, m2) == RuntimeRelation::NotDetermined);
    }
    SUBCASE("incomparable quadruples are not determined") {
        PhotonDistribution n1{{1, 1, 1, 1, 1, 1}}, m1{{2, 2, 2, 0, 0, 0}};
        PhotonDistribution n2{{1, 1, 1, 1, 1, 1}}, m2{{3, 1, 1, 1, 0, 0}};
        CHECK(runtime_compare(n1, m1, n2, m2) == RuntimeRelation::NotDetermined);
    }
    SUBCASE("orientation precondition") {
        PhotonDistribution n1{{2, 0}}, m1{{1, 1}};
        CHECK_THROWS_AS(runtime_compare(n1, m1, n1, m1), Error);
    }
}

TEST_CASE("runtime_approx: table rows with constant 1") {
    PhotonDistribution ones4 = PhotonDistribution::single_photons(4);
    CHECK(runtime_approx(ones4, ones4, 0.5) == doctest::Approx(64.0)); // N^2/eps^2
    PhotonDistribution m22{{2, 2, 0, 0}};
    CHECK(runtime_approx(ones4, m22, 1.0) == doctest::Approx(8.0)); // N * alpha_m
    PhotonDistribution n22{{2, 2}}, m31{{3, 1}};
    CHECK(runtime_approx(n22, m31, 1.0) == doctest::Approx(4.0)); // alpha_n * alpha_m
    CHECK(runtime_approx(m22, ones4, 2.0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(runtime_approx(ones4, ones4, 0.0), Error);
}

TEST_CASE("figure4_data reproduces both columns, strictly increasing") {
    std::vector<Figure4Row> rows = figure4_data();
    REQUIRE(rows.size() == 9);
    const long expect_q[] = {1, 6, 15, 30, 60, 120, 180, 360, 720};
    const long expect_t[] = {7, 24, 30, 60, 72, 128, 144, 240, 384};
    for (std::size_t i = 0; i < 9; ++i) {
        CHECK(rows[i].index == int(i) + 1);
        CHECK(rows[i].Q == expect_q[i]);
        CHECK(rows[i].t_min_over_6 == expect_t[i]);
        if (i) {
            CHECK(rows[i].Q > rows[i - 1].Q);
            CHECK(rows[i].t_min_over_6 > rows[i - 1].t_min_over_6);
        }
    }
    CHECK(rows[0].partition == Partition::of({6}));
    CHECK(rows[8].partition == Partition::of({1, 1, 1, 1, 1, 1}));
}

TEST_CASE("figure4 CSV format") {
    std::string csv = figure4_csv(figure4_data());
    CHECK(csv.starts_with("index,partition,Q,Tmin_over_6\n"));
    CHECK(csv.find("1,6,1,7\n") != std::string::npos);
    CHECK(csv.find("5,3+2+1,60,72\n") != std::string::npos);
    CHECK(csv.find("9,1+1+1+1+1+1,720,384\n") != std::string::npos);
}

TEST_CASE("the structural count predicts the actual outer-loop count") {
    ComplexMatrix u = random_unitary(4, 8);
    PhotonDistribution n{{2, 1, 1, 0}}, m{{3, 1, 0, 0}};
    RuntimeEstimate est = runtime_exact(n, m);
    PermanentResult r = per_roots_of_unity(u, n, m);
    Bigint smaller = est.prod_n <= est.prod_m ? est.prod_n : est.prod_m;
    CHECK(Bigint(r.term_count) == smaller);
}
