#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "rieszlab/descriptors.hpp"
#include "rieszlab/kernels.hpp"
#include "rieszlab/spectral.hpp"

using namespace rieszlab;

namespace {

ArcUnion half_circle() {
    return ArcUnion::normalize({{Rational(0), Rational(1, 2)}});
}

IndexSet explicit_set(std::vector<long long> ks, Window w) {
    IndexSet s;
    s.window = w;
    s.members = std::move(ks);
    s.generator = SeqDescriptor::explicit_set(s.members);
    return s;
}

// characteristic polynomial by Faddeev-LeVerrier; coefficients are real for
// Hermitian input
std::vector<double> char_poly(const HermitianMatrix& h) {
    const int n = h.dim();
    auto mul = [n](const std::vector<std::complex<double>>& a,
                   const std::vector<std::complex<double>>& b) {
        std::vector<std::complex<double>> c(a.size(), {0.0, 0.0});
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                auto aik = a[static_cast<size_t>(i) * n + k];
                if (aik == std::complex<double>{}) continue;
                for (int j = 0; j < n; ++j)
                    c[static_cast<size_t>(i) * n + j] +=
                        aik * b[static_cast<size_t>(k) * n + j];
            }
        return c;
    };
    std::vector<std::complex<double>> a = h.data(), m = h.data();
    std::vector<double> coeff(static_cast<size_t>(n) + 1, 0.0);
    coeff[0] = 1.0;   // leading lambda^n
    double ck = 0.0;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            for (int i = 0; i < n; ++i)
                m[static_cast<size_t>(i) * n + i] += ck;
            m = mul(a, m);
        }
        std::complex<double> tr{0.0, 0.0};
        for (int i = 0; i < n; ++i) tr += m[static_cast<size_t>(i) * n + i];
        ck = -tr.real() / k;
        coeff[static_cast<size_t>(k)] = ck;
    }
    return coeff;
}

double eval_poly(const std::vector<double>& c, double x) {
    double v = 0.0;
    for (double ci : c) v = v * x + ci;
    return v;
}

// all-real roots by sign-change bisection over the Gershgorin interval;
// assumes simple roots (fine for the random matrices used here)
std::vector<double> poly_roots(const HermitianMatrix& h) {
    auto c = char_poly(h);
    double radius = 0.0;
    for (int i = 0; i < h.dim(); ++i) {
        double row = 0.0;
        for (int j = 0; j < h.dim(); ++j) row += std::abs(h.entry(i, j));
        radius = std::max(radius, row);
    }
    double lo = -radius - 1.0, hi = radius + 1.0;
    const int samples = 40000;
    std::vector<double> roots;
    double prev_x = lo, prev_v = eval_poly(c, lo);
    for (int i = 1; i <= samples; ++i) {
        double x = lo + (hi - lo) * i / samples;
        double v = eval_poly(c, x);
        if (prev_v == 0.0) roots.push_back(prev_x);
        else if ((prev_v < 0.0) != (v < 0.0)) {
            double a = prev_x, b = x;
            for (int it = 0; it < 200; ++it) {
                double mid = 0.5 * (a + b);
                if ((eval_poly(c, a) < 0.0) != (eval_poly(c, mid) < 0.0))
                    b = mid;
                else
                    a = mid;
            }
            roots.push_back(0.5 * (a + b));
        }
        prev_x = x;
        prev_v = v;
    }
    return roots;
}

HermitianMatrix random_hermitian(std::mt19937& rng, int n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    HermitianMatrix h(n);
    for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k)
            h.set(j, k, j == k ? std::complex<double>(u(rng), 0.0)
                               : std::complex<double>(u(rng), u(rng)));
    return h;
}

ArcUnion random_union(std::mt19937& rng, long long denom, int max_arcs) {
    std::uniform_int_distribution<long long> pick(0, denom - 1);
    std::uniform_int_distribution<int> count(1, max_arcs);
    std::vector<std::pair<Rational, Rational>> raw;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
        long long a = pick(rng), b = pick(rng);
        if (a == b) b = (a + 1) % denom;
        raw.emplace_back(Rational(a, denom), Rational(b, denom));
    }
    return ArcUnion::normalize(raw, true);
}

std::vector<long long> random_members(std::mt19937& rng, int n, long long span) {
    std::uniform_int_distribution<long long> pick(-span, span);
    std::vector<long long> ms;
    while (static_cast<int>(ms.size()) < n) {
        long long k = pick(rng);
        if (std::find(ms.begin(), ms.end(), k) == ms.end()) ms.push_back(k);
    }
    std::sort(ms.begin(), ms.end());
    return ms;
}

} // namespace

TEST_CASE("gram fixtures") {
    IndexSet four = explicit_set({0, 1, 2, 3}, {0, 3});
    HermitianMatrix id4 = gram_matrix(ArcUnion::full(), four);
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
            CHECK(std::abs(id4.entry(j, k) -
                           (j == k ? std::complex<double>(1, 0)
                                   : std::complex<double>(0, 0))) < 1e-15);

    HermitianMatrix g2 = gram_matrix(half_circle(), explicit_set({0, 1}, {0, 1}));
    CHECK(g2.entry(0, 0) == std::complex<double>(0.5, 0.0));
    CHECK(std::abs(g2.entry(0, 1) - std::complex<double>(0.0, 1.0 / M_PI)) < 1e-15);
    CHECK(std::abs(g2.entry(1, 0) - std::complex<double>(0.0, -1.0 / M_PI)) < 1e-15);

    HermitianMatrix g3 = gram_matrix(half_circle(), explicit_set({0, 2}, {0, 2}));
    CHECK(std::abs(g3.entry(0, 1)) < 1e-15);
    CHECK(g3.entry(1, 1) == std::complex<double>(0.5, 0.0));

    CHECK_THROWS_AS(gram_matrix(half_circle(), explicit_set({}, {0, 1})),
                    EmptyIndexSet);
}

TEST_CASE("eigenvalue fixtures") {
    HermitianMatrix id8(8);
    for (int i = 0; i < 8; ++i) id8.set(i, i, 1.0);
    for (double ev : hermitian_eigenvalues(id8)) CHECK(ev == doctest::Approx(1.0));

    auto ev2 = hermitian_eigenvalues(
        gram_matrix(half_circle(), explicit_set({0, 1}, {0, 1})));
    CHECK(ev2[0] == doctest::Approx(0.5 - 1.0 / M_PI).epsilon(1e-12));
    CHECK(ev2[1] == doctest::Approx(0.5 + 1.0 / M_PI).epsilon(1e-12));

    HermitianMatrix d3(3);
    d3.set(0, 0, 3.0);
    d3.set(1, 1, 1.0);
    d3.set(2, 2, 2.0);
    auto ev3 = hermitian_eigenvalues(d3);
    CHECK(ev3 == std::vector<double>{1.0, 2.0, 3.0});
}

TEST_CASE("eigensolver agrees with the characteristic polynomial oracle") {
    std::mt19937 rng(2718);
    for (int n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 4; ++trial) {
            HermitianMatrix h = random_hermitian(rng, n);
            auto fast = hermitian_eigenvalues(h);
            auto slow = poly_roots(h);
            REQUIRE(slow.size() == fast.size());
            for (size_t i = 0; i < fast.size(); ++i)
                CHECK(std::abs(fast[i] - slow[i]) < 1e-7);
        }
    }
}

TEST_CASE("eigensolver residuals meet the contract") {
    std::mt19937 rng(31415);
    for (int n : {4, 16, 48}) {
        CHECK(hermitian_eigen_residual(random_hermitian(rng, n)) < 1e-9);
    }
}

TEST_CASE("gram trace and range properties") {
    std::mt19937 rng(1618);
    for (int trial = 0; trial < 20; ++trial) {
        ArcUnion s = random_union(rng, 1 << 10, 4);
        IndexSet lam = explicit_set(random_members(rng, 10, 40), {-40, 40});
        HermitianMatrix g = gram_matrix(s, lam);
        double mu = s.measure().to_double();
        CHECK(std::abs(g.trace() - 10.0 * mu) < 1e-8);
        auto ev = hermitian_eigenvalues(g);
        CHECK(ev.front() > -1e-9);
        CHECK(ev.back() < 1.0 + 1e-9);
    }
}

TEST_CASE("gram spectra are translation invariant") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<long long> shift_pick(-50, 50);
    for (int trial = 0; trial < 30; ++trial) {
        ArcUnion s = random_union(rng, 1 << 9, 3);
        auto ms = random_members(rng, 8, 30);
        long long shift = shift_pick(rng);
        std::vector<long long> moved;
        for (long long m : ms) moved.push_back(m + shift);
        auto ev0 = hermitian_eigenvalues(gram_matrix(s, explicit_set(ms, {-80, 80})));
        auto ev1 =
            hermitian_eigenvalues(gram_matrix(s, explicit_set(moved, {-80, 80})));
        for (size_t i = 0; i < ev0.size(); ++i)
            CHECK(std::abs(ev0[i] - ev1[i]) < 1e-10);
    }
}

TEST_CASE("gram spectra are rotation covariant") {
    std::mt19937 rng(778);
    std::uniform_int_distribution<long long> theta_num(0, (1 << 9) - 1);
    for (int trial = 0; trial < 30; ++trial) {
        ArcUnion s = random_union(rng, 1 << 9, 3);
        Rational theta(theta_num(rng), 1 << 9);
        auto ms = random_members(rng, 8, 30);
        auto ev0 = hermitian_eigenvalues(gram_matrix(s, explicit_set(ms, {-40, 40})));
        auto ev1 = hermitian_eigenvalues(
            gram_matrix(s.rotated(theta), explicit_set(ms, {-40, 40})));
        for (size_t i = 0; i < ev0.size(); ++i)
            CHECK(std::abs(ev0[i] - ev1[i]) < 1e-10);
    }
}

TEST_CASE("interlacing under one-element growth") {
    std::mt19937 rng(779);
    for (int trial = 0; trial < 20; ++trial) {
        ArcUnion s = random_union(rng, 1 << 9, 3);
        auto ms = random_members(rng, 12, 60);
        double prev_min = 1.0, prev_max = 0.0;
        for (size_t n = 1; n <= ms.size(); ++n) {
            std::vector<long long> head(ms.begin(), ms.begin() + n);
            std::sort(head.begin(), head.end());
            auto ev = hermitian_eigenvalues(gram_matrix(s, explicit_set(head, {-60, 60})));
            if (n > 1) {
                CHECK(ev.front() <= prev_min + 1e-9);
                CHECK(ev.back() >= prev_max - 1e-9);
            }
            prev_min = ev.front();
            prev_max = ev.back();
        }
    }
}

TEST_CASE("riesz trend fixtures") {
    std::vector<Window> windows{{-8, 8}, {-16, 16}, {-32, 32}, {-128, 128}};
    TrendReport even = riesz_trend(half_circle(), SeqDescriptor::periodic(2, 0),
                                   windows);
    for (const auto& rep : even.reports)
        CHECK(rep.lambda_min == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(even.classification == "bounded-below");

    TrendReport all = riesz_trend(half_circle(), SeqDescriptor::periodic(1, 0),
                                  windows);
    CHECK(all.classification == "decaying");
    CHECK(all.reports.back().lambda_min < 0.1 * all.reports.front().lambda_min);

    TrendReport full = riesz_trend(ArcUnion::full(), SeqDescriptor::periodic(1, 0),
                                   windows);
    for (const auto& rep : full.reports)
        CHECK(rep.lambda_min == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("projection sum spectrum") {
    IndexSet none = explicit_set({}, {-3, 3});
    auto full = projection_sum_spectrum(ArcUnion::full(), none, {-3, 3});
    for (double ev : full.eigenvalues) CHECK(ev == doctest::Approx(1.0));

    IndexSet everything = explicit_set({-3, -2, -1, 0, 1, 2, 3}, {-3, 3});
    auto empty = projection_sum_spectrum(ArcUnion::empty_set(), everything, {-3, 3});
    for (double ev : empty.eigenvalues) CHECK(ev == doctest::Approx(1.0));

    // 3x3 fixture: Toeplitz(1/2; +-i/pi, 0) + diag(1,0,1), checked against the
    // polynomial oracle
    IndexSet odds = explicit_set({-1, 1}, {-1, 1});
    auto rep = projection_sum_spectrum(half_circle(), odds, {-1, 1});
    HermitianMatrix expect(3);
    expect.set(0, 0, 1.5);
    expect.set(1, 1, 0.5);
    expect.set(2, 2, 1.5);
    expect.set(0, 1, std::complex<double>(0.0, 1.0 / M_PI));
    expect.set(1, 2, std::complex<double>(0.0, 1.0 / M_PI));
    expect.set(0, 2, 0.0);
    auto oracle = poly_roots(expect);
    REQUIRE(rep.eigenvalues.size() == 3);
    for (size_t i = 0; i < 3; ++i)
        CHECK(rep.eigenvalues[i] == doctest::Approx(oracle[i]).epsilon(1e-7));
    for (double ev : rep.eigenvalues) {
        CHECK(ev >= -1e-9);
        CHECK(ev <= 2.0 + 1e-9);
    }
}

TEST_CASE("epsilon conversion") {
    CHECK(epsilon_convert(1.0) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(epsilon_convert(1e-4) == doctest::Approx(1e-4).epsilon(1e-6));
    CHECK(epsilon_convert(std::sqrt(3.0)) == doctest::Approx(std::sqrt(3.0) / 2.0));
    double prev = 0.0;
    for (double e1 = 0.1; e1 < 5.0; e1 += 0.1) {
        double e2 = epsilon_convert(e1);
        CHECK(e2 > prev);
        CHECK(e2 < 1.0);
        prev = e2;
    }
    CHECK_THROWS_AS(epsilon_convert(0.0), NonPositive);
    CHECK_THROWS_AS(epsilon_convert(-2.0), NonPositive);
}

TEST_CASE("serial and OpenMP kernels agree bit for bit") {
    std::mt19937 rng(31337);
    ArcUnion s = random_union(rng, 1 << 10, 5);
    set_parallelism(4);

    auto t_serial = kernels::coefficient_table_serial(s, 200);
    auto t_omp = kernels::coefficient_table_omp(s, 200);
    REQUIRE(t_serial.size() == t_omp.size());
    for (size_t i = 0; i < t_serial.size(); ++i) CHECK(t_serial[i] == t_omp[i]);

    auto ms = random_members(rng, 40, 100);
    HermitianMatrix g_serial = kernels::gram_fill_serial(ms, t_serial);
    HermitianMatrix g_omp = kernels::gram_fill_omp(ms, t_serial);
    CHECK(g_serial.data() == g_omp.data());

    std::vector<double> weights;
    std::vector<long long> shifts;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<long long> sh(0, (1 << 12) - 1);
    for (int i = 0; i < 300; ++i) {
        weights.push_back(u(rng));
        shifts.push_back(sh(rng));
    }
    auto ind = kernels::sample_indicator_serial(s, 1 << 12);
    CHECK(ind == kernels::sample_indicator_omp(s, 1 << 12));
    auto v_serial = kernels::circular_correlate_serial(weights, shifts, ind);
    auto v_omp = kernels::circular_correlate_omp(weights, shifts, ind);
    CHECK(v_serial == v_omp);
    set_parallelism(1);
}

TEST_CASE("matrix dump round-trip") {
    std::mt19937 rng(555);
    HermitianMatrix h = random_hermitian(rng, 5);
    std::stringstream buf;
    write_matrix(buf, h);
    HermitianMatrix back = read_matrix(buf);
    REQUIRE(back.dim() == 5);
    for (int j = 0; j < 5; ++j)
        for (int k = 0; k < 5; ++k)
            CHECK(std::abs(back.entry(j, k) - h.entry(j, k)) < 1e-15);
}
