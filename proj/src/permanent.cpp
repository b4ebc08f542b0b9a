#include "linopt/permanent.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <thread>

#include "linopt/compensated.hpp"

namespace linopt {

namespace {

constexpr std::uint64_t kMaxOuterTerms = 1ull << 30;

double factorial_d(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= double(k);
    return f;
}

std::uint64_t factorial_u64(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= std::uint64_t(k);
    return f;
}

// prod (d_i + 1) clamped so oversize inputs fail the guard instead of
// overflowing.
std::uint64_t term_product(const PhotonDistribution& d) {
    std::uint64_t prod = 1;
    for (int occ : d.occupations()) {
        std::uint64_t q = std::uint64_t(occ) + 1;
        if (prod > (kMaxOuterTerms * 4) / q) return kMaxOuterTerms * 4;
        prod *= q;
    }
    return prod;
}

void check_square_inputs(const ComplexMatrix& u, const PhotonDistribution& n,
                         const PhotonDistribution& m) {
    if (n.modes() != u.dim() || m.modes() != u.dim()) {
        raise(ErrorCode::DimensionMismatch, "distribution length must equal the matrix dimension");
    }
    if (n.total() != m.total()) {
        raise(ErrorCode::WeightMismatch, "input and output distributions must hold the same photon number");
    }
    if (n.total() == 0) raise(ErrorCode::EmptyDistribution, "photon number must be at least 1");
}

// Splits [lo, hi) into roughly equal contiguous chunks, evaluates them (in
// parallel when threads > 1) and combines the per-chunk compensated sums in
// chunk order, so results are reproducible for a fixed thread count.
template <typename ChunkFn>
cplx chunked_sum(std::uint64_t lo, std::uint64_t hi, unsigned threads, ChunkFn chunk_fn) {
    std::uint64_t total = hi - lo;
    unsigned nchunks = threads;
    if (nchunks <= 1 || total < 2048) {
        return chunk_fn(lo, hi);
    }
    if (std::uint64_t(nchunks) > total) nchunks = unsigned(total);
    std::vector<cplx> partial(nchunks);
    std::vector<std::thread> workers;
    workers.reserve(nchunks);
    for (unsigned c = 0; c < nchunks; ++c) {
        std::uint64_t a = lo + total * c / nchunks;
        std::uint64_t b = lo + total * (c + 1) / nchunks;
        workers.emplace_back([&, a, b, c] { partial[c] = chunk_fn(a, b); });
    }
    for (auto& w : workers) w.join();
    ComplexCompensatedSum acc;
    for (const cplx& p : partial) acc.add(p);
    return acc.value();
}

// ---------------------------------------------------------------------------
// Generalized roots-of-unity sum.
//
// For the matrix B = expand_submatrix(U, n, m), attach one root-of-unity
// variable z_i in R[w_i + 1] to each mode of the repetition vector w on one
// axis and raise the opposite axis' weighted sums to the powers p_j:
//
//   t(z) = prod_i conj(z_i)^{w_i} * prod_j ( sum_i coef(i, j) z_i )^{p_j}
//
// Averaging t over the product of root sets keeps exactly the monomials in
// which every z_i appears with exponent w_i (mod w_i + 1), and the sum
// constraint forces the exponent to be exactly w_i, which reproduces the
// permanent's assignments up to the w_i! orderings of repeated columns:
//
//   Per(B) = prod_i w_i! * mean_z t(z)
//          = prod_i (w_i! / (w_i + 1)) * sum_z t(z).
//
// The constant was validated once against per_naive over random 2x2..4x4
// batteries (the bare expectation 1/prod(w_i + 1) is the right measure; the
// extra prod w_i! accounts for repeated-column orderings) and is asserted by
// the oracle-equivalence suites.
// ---------------------------------------------------------------------------

struct RouAxis {
    std::vector<int> modes; // mode indices of the repetition vector's support
    std::vector<int> mult;  // multiplicities (>= 1)
};

RouAxis axis_of(const PhotonDistribution& d) {
    RouAxis axis;
    for (std::size_t i = 0; i < d.modes(); ++i) {
        if (d[i] > 0) {
            axis.modes.push_back(int(i));
            axis.mult.push_back(d[i]);
        }
    }
    return axis;
}

// coef(i, j): entry of U linking z-mode i with power-mode j.
template <typename CoefFn>
cplx rou_sum(const RouAxis& z_axis, const RouAxis& p_axis, CoefFn coef) {
    const int k = int(z_axis.modes.size());
    const int l = int(p_axis.modes.size());

    std::vector<std::vector<cplx>> roots(k), phase(k);
    for (int i = 0; i < k; ++i) {
        int q = z_axis.mult[i] + 1;
        roots[i].resize(q);
        phase[i].resize(q);
        for (int d = 0; d < q; ++d) {
            double ang = 2.0 * std::numbers::pi_v<double> * double(d) / double(q);
            roots[i][d] = {std::cos(ang), std::sin(ang)};
        }
        for (int d = 0; d < q; ++d) {
            phase[i][d] = std::conj(roots[i][(d * z_axis.mult[i]) % q]);
        }
    }
    std::vector<cplx> c(std::size_t(k) * l);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < l; ++j) c[std::size_t(i) * l + j] = coef(i, j);
    }

    // Loopless reflected mixed-radix Gray enumeration: exactly one digit
    // moves by +-1 per step, so the weighted sums update in O(l).
    std::vector<int> a(k, 0), o(k, 1), f(k + 1);
    std::iota(f.begin(), f.end(), 0);

    std::vector<cplx> s(l);
    auto refresh = [&] {
        for (int j = 0; j < l; ++j) {
            cplx sum = 0.0;
            for (int i = 0; i < k; ++i) sum += c[std::size_t(i) * l + j] * roots[i][a[i]];
            s[j] = sum;
        }
    };
    refresh();

    ComplexCompensatedSum acc;
    std::uint64_t visits = 0;
    while (true) {
        cplx term = 1.0;
        for (int i = 0; i < k; ++i) term *= phase[i][a[i]];
        for (int j = 0; j < l; ++j) {
            cplx base = s[j];
            cplx pw = base;
            for (int e = 1; e < p_axis.mult[j]; ++e) pw *= base;
            term *= pw;
        }
        acc.add(term);

        if (++visits % 65536 == 0) refresh(); // cap incremental-update drift

        int j = f[0];
        f[0] = 0;
        if (j == k) break;
        int old = a[j];
        a[j] += o[j];
        int now = a[j];
        if (now == 0 || now == z_axis.mult[j]) {
            o[j] = -o[j];
            f[j] = f[j + 1];
            f[j + 1] = j + 1;
        }
        cplx delta = roots[j][now] - roots[j][old];
        for (int jj = 0; jj < l; ++jj) s[jj] += delta * c[std::size_t(j) * l + jj];
    }

    double norm = 1.0;
    for (int i = 0; i < k; ++i) {
        norm *= factorial_d(z_axis.mult[i]) / double(z_axis.mult[i] + 1);
    }
    return acc.value() * norm;
}

} // namespace

const char* to_string(Algorithm a) {
    switch (a) {
        case Algorithm::Naive: return "naive";
        case Algorithm::Ryser: return "ryser";
        case Algorithm::Glynn: return "glynn";
        case Algorithm::RepeatedCols: return "repeated-cols";
        case Algorithm::RootsOfUnity: return "roots-of-unity";
        case Algorithm::KanSeries: return "kan-series";
    }
    return "?";
}

PermanentResult per_naive(const ComplexMatrix& a) {
    const int n = int(a.dim());
    if (n > 10) {
        raise(ErrorCode::SizeLimit, "per_naive is limited to 10x10 (factorial term count)");
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    ComplexCompensatedSum acc;
    do {
        cplx prod = 1.0;
        for (int i = 0; i < n; ++i) prod *= a(i, perm[i]);
        acc.add(prod);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {acc.value(), Algorithm::Naive, factorial_u64(n)};
}

PermanentResult per_ryser(const ComplexMatrix& a, const PermanentOptions& opts) {
    const int n = int(a.dim());
    if (n > 30) raise(ErrorCode::SizeLimit, "per_ryser is limited to 30x30 (2^N term count)");
    const std::uint64_t total = 1ull << n;

    auto chunk = [&](std::uint64_t lo, std::uint64_t hi) {
        // Subsets in Gray order; entering iteration k the row sums hold the
        // columns of gray(k - 1).
        std::uint64_t g_prev = (lo - 1) ^ ((lo - 1) >> 1);
        std::vector<cplx> sums(n, cplx{0.0, 0.0});
        for (int c = 0; c < n; ++c) {
            if ((g_prev >> c) & 1) {
                for (int r = 0; r < n; ++r) sums[r] += a(r, c);
            }
        }
        ComplexCompensatedSum acc;
        for (std::uint64_t k = lo; k < hi; ++k) {
            std::uint64_t g = k ^ (k >> 1);
            int c = std::countr_zero(g ^ g_prev);
            if ((g >> c) & 1) {
                for (int r = 0; r < n; ++r) sums[r] += a(r, c);
            } else {
                for (int r = 0; r < n; ++r) sums[r] -= a(r, c);
            }
            cplx prod = 1.0;
            for (int r = 0; r < n; ++r) prod *= sums[r];
            acc.add((std::popcount(g) & 1) ? -prod : prod);
            g_prev = g;
        }
        return acc.value();
    };

    cplx sum = chunked_sum(1, total, opts.threads, chunk);
    cplx value = (n % 2) ? -sum : sum;
    return {value, Algorithm::Ryser, total};
}

PermanentResult per_glynn(const ComplexMatrix& a, const PermanentOptions& opts) {
    const int n = int(a.dim());
    if (n > 30) raise(ErrorCode::SizeLimit, "per_glynn is limited to 30x30 (2^N term count)");
    const std::uint64_t total = 1ull << n;

    auto chunk = [&](std::uint64_t lo, std::uint64_t hi) {
        // Sign vectors in Gray order: bit c set means x_c = -1.
        std::uint64_t g = lo ^ (lo >> 1);
        std::vector<cplx> sums(n, cplx{0.0, 0.0});
        for (int r = 0; r < n; ++r) {
            cplx s = 0.0;
            for (int c = 0; c < n; ++c) s += ((g >> c) & 1) ? -a(r, c) : a(r, c);
            sums[r] = s;
        }
        ComplexCompensatedSum acc;
        for (std::uint64_t k = lo; k < hi; ++k) {
            cplx prod = 1.0;
            for (int r = 0; r < n; ++r) prod *= sums[r];
            acc.add((std::popcount(g) & 1) ? -prod : prod);
            if (k + 1 < hi) {
                int c = std::countr_zero(k + 1);
                g ^= 1ull << c;
                cplx delta = ((g >> c) & 1) ? cplx{-2.0, 0.0} : cplx{2.0, 0.0};
                for (int r = 0; r < n; ++r) sums[r] += delta * a(r, c);
            }
        }
        return acc.value();
    };

    cplx sum = chunked_sum(0, total, opts.threads, chunk);
    return {sum / double(total), Algorithm::Glynn, total};
}

PermanentResult per_repeated_cols(const ComplexMatrix& u, const PhotonDistribution& n) {
    const std::size_t modes = u.dim();
    if (n.modes() != modes) {
        raise(ErrorCode::DimensionMismatch, "distribution length must equal the matrix dimension");
    }
    if (n.total() == 0) raise(ErrorCode::EmptyDistribution, "photon number must be at least 1");
    if (std::size_t(n.total()) != modes) {
        raise(ErrorCode::DimensionMismatch,
              "column repetition keeps every row once: sum(n) must equal the matrix dimension");
    }
    if (n.total() > 30) raise(ErrorCode::SizeLimit, "per_repeated_cols is limited to N <= 30");
    std::uint64_t terms = term_product(n);
    if (terms > kMaxOuterTerms) {
        raise(ErrorCode::SizeLimit, "outer-sum term count exceeds 2^30");
    }

    RouAxis z = axis_of(n); // repeated columns carry the roots
    RouAxis p;
    p.modes.resize(modes);
    std::iota(p.modes.begin(), p.modes.end(), 0);
    p.mult.assign(modes, 1);

    cplx value = rou_sum(z, p, [&](int zi, int pj) { return u(p.modes[pj], z.modes[zi]); });
    return {value, Algorithm::RepeatedCols, terms};
}

PermanentResult per_roots_of_unity(const ComplexMatrix& u, const PhotonDistribution& n,
                                   const PhotonDistribution& m) {
    check_square_inputs(u, n, m);
    if (n.total() > 30) raise(ErrorCode::SizeLimit, "per_roots_of_unity is limited to N <= 30");
    std::uint64_t prod_n = term_product(n);
    std::uint64_t prod_m = term_product(m);
    if (std::min(prod_n, prod_m) > kMaxOuterTerms) {
        raise(ErrorCode::SizeLimit, "outer-sum term count exceeds 2^30");
    }

    cplx value;
    std::uint64_t terms;
    if (prod_n <= prod_m) {
        // Roots on the input modes (rows of U), output multiplicities as powers.
        RouAxis z = axis_of(n), p = axis_of(m);
        value = rou_sum(z, p, [&](int zi, int pj) { return u(z.modes[zi], p.modes[pj]); });
        terms = prod_n;
    } else {
        RouAxis z = axis_of(m), p = axis_of(n);
        value = rou_sum(z, p, [&](int zi, int pj) { return u(p.modes[pj], z.modes[zi]); });
        terms = prod_m;
    }
    return {value, Algorithm::RootsOfUnity, terms};
}

namespace {

// Binomial-weighted series for Per(expand_submatrix(U, a, b)) with the
// series variables attached to the `a` axis. entry(i, j) is the U element
// linking a-support mode i with b-support mode j.
template <typename CoefFn>
cplx kan_sum(const RouAxis& a_axis, const RouAxis& b_axis, int photons, CoefFn coef) {
    const int k = int(a_axis.modes.size());
    const int l = int(b_axis.modes.size());

    std::vector<std::vector<double>> binom(k);
    for (int i = 0; i < k; ++i) {
        int q = a_axis.mult[i];
        binom[i].resize(q + 1);
        binom[i][0] = 1.0;
        for (int v = 1; v <= q; ++v) {
            binom[i][v] = binom[i][v - 1] * double(q - v + 1) / double(v);
            binom[i][v] = std::round(binom[i][v]); // exact small integers
        }
    }
    std::vector<cplx> c(std::size_t(k) * l);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < l; ++j) c[std::size_t(i) * l + j] = coef(i, j);
    }

    std::vector<int> a(k, 0), o(k, 1), f(k + 1);
    std::iota(f.begin(), f.end(), 0);

    // Row weights x_i = a_i - 2 v_i start at v = 0.
    std::vector<cplx> s(l);
    auto refresh = [&] {
        for (int j = 0; j < l; ++j) {
            cplx sum = 0.0;
            for (int i = 0; i < k; ++i) {
                sum += double(a_axis.mult[i] - 2 * a[i]) * c[std::size_t(i) * l + j];
            }
            s[j] = sum;
        }
    };
    refresh();

    ComplexCompensatedSum acc;
    bool odd = false;
    std::uint64_t visits = 0;
    while (true) {
        double weight = 1.0;
        for (int i = 0; i < k; ++i) weight *= binom[i][a[i]];
        cplx term = odd ? -weight : weight;
        for (int j = 0; j < l; ++j) {
            cplx base = s[j];
            cplx pw = base;
            for (int e = 1; e < b_axis.mult[j]; ++e) pw *= base;
            term *= pw;
        }
        acc.add(term);

        if (++visits % 65536 == 0) refresh();

        int j = f[0];
        f[0] = 0;
        if (j == k) break;
        a[j] += o[j];
        double dx = -2.0 * double(o[j]); // digit +1 lowers the weight by 2
        if (a[j] == 0 || a[j] == a_axis.mult[j]) {
            o[j] = -o[j];
            f[j] = f[j + 1];
            f[j + 1] = j + 1;
        }
        odd = !odd;
        for (int jj = 0; jj < l; ++jj) s[jj] += dx * c[std::size_t(j) * l + jj];
    }
    return acc.value() * std::ldexp(1.0, -photons); // 1 / 2^N
}

} // namespace

PermanentResult per_kan_series(const ComplexMatrix& u, const PhotonDistribution& n,
                               const PhotonDistribution& m) {
    check_square_inputs(u, n, m);
    if (n.total() > 30) raise(ErrorCode::SizeLimit, "per_kan_series is limited to N <= 30");
    std::uint64_t prod_n = term_product(n);
    std::uint64_t prod_m = term_product(m);
    if (std::min(prod_n, prod_m) > kMaxOuterTerms) {
        raise(ErrorCode::SizeLimit, "outer-sum term count exceeds 2^30");
    }

    cplx value;
    std::uint64_t terms;
    if (prod_n <= prod_m) {
        RouAxis a = axis_of(n), b = axis_of(m);
        value = kan_sum(a, b, n.total(),
                        [&](int ai, int bj) { return u(a.modes[ai], b.modes[bj]); });
        terms = prod_n;
    } else {
        // Same permanent through the transposed expansion.
        RouAxis a = axis_of(m), b = axis_of(n);
        value = kan_sum(a, b, n.total(),
                        [&](int ai, int bj) { return u(b.modes[bj], a.modes[ai]); });
        terms = prod_m;
    }
    return {value, Algorithm::KanSeries, terms};
}

Amplitude amplitude(const ComplexMatrix& u, const PhotonDistribution& n,
                    const PhotonDistribution& m, Algorithm algo, const PermanentOptions& opts) {
    check_square_inputs(u, n, m);

    PermanentResult per{};
    switch (algo) {
        case Algorithm::Naive:
            per = per_naive(expand_submatrix(u, n, m));
            break;
        case Algorithm::Ryser:
            per = per_ryser(expand_submatrix(u, n, m), opts);
            break;
        case Algorithm::Glynn:
            per = per_glynn(expand_submatrix(u, n, m), opts);
            break;
        case Algorithm::RepeatedCols: {
            // One side must be unbunched; the other side's repetitions carry
            // the roots, exactly as in per_repeated_cols.
            if (m.unbunched()) {
                RouAxis z = axis_of(n), p = axis_of(m);
                cplx value =
                    rou_sum(z, p, [&](int zi, int pj) { return u(z.modes[zi], p.modes[pj]); });
                per = {value, Algorithm::RepeatedCols, term_product(n)};
            } else if (n.unbunched()) {
                RouAxis z = axis_of(m), p = axis_of(n);
                cplx value =
                    rou_sum(z, p, [&](int zi, int pj) { return u(p.modes[pj], z.modes[zi]); });
                per = {value, Algorithm::RepeatedCols, term_product(m)};
            } else {
                raise(ErrorCode::UnsupportedAlgo,
                      "repeated-cols requires an unbunched input or output distribution");
            }
            break;
        }
        case Algorithm::RootsOfUnity:
            per = per_roots_of_unity(u, n, m);
            break;
        case Algorithm::KanSeries:
            per = per_kan_series(u, n, m);
            break;
    }

    double norm2 = 1.0;
    for (int occ : n.occupations()) norm2 *= factorial_d(occ);
    for (int occ : m.occupations()) norm2 *= factorial_d(occ);
    double norm = std::sqrt(norm2);
    return {per.value / norm, per.value, norm};
}

std::vector<PhotonDistribution> enumerate_distributions(int total, std::size_t modes) {
    std::vector<PhotonDistribution> out;
    std::vector<int> cur(modes, 0);
    // Lexicographically descending: all of the remaining photons are pushed
    // as far left as possible first.
    auto rec = [&](auto&& self, std::size_t mode, int remaining) -> void {
        if (mode + 1 == modes) {
            cur[mode] = remaining;
            out.push_back(PhotonDistribution(cur));
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            cur[mode] = k;
            self(self, mode + 1, remaining - k);
        }
    };
    if (modes == 0) raise(ErrorCode::DimensionMismatch, "at least one mode required");
    rec(rec, 0, total);
    return out;
}

std::vector<std::pair<PhotonDistribution, double>>
output_distribution(const ComplexMatrix& u, const PhotonDistribution& n, Algorithm algo) {
    const std::size_t modes = u.dim();
    if (n.modes() != modes) {
        raise(ErrorCode::DimensionMismatch, "distribution length must equal the matrix dimension");
    }
    if (n.total() == 0) raise(ErrorCode::EmptyDistribution, "photon number must be at least 1");

    // C(N + M - 1, N) output states.
    double count = 1.0;
    for (int k = 1; k <= n.total(); ++k) {
        count *= double(modes - 1 + k) / double(k);
        if (count > 1e5) {
            raise(ErrorCode::SizeLimit, "output state count exceeds 1e5");
        }
    }

    std::vector<std::pair<PhotonDistribution, double>> result;
    for (PhotonDistribution& m : enumerate_distributions(n.total(), modes)) {
        Amplitude amp = amplitude(u, n, m, algo);
        result.emplace_back(std::move(m), std::norm(amp.value));
    }
    return result;
}

} // namespace linopt
