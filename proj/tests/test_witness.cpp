#include <doctest.h>

#include <cmath>

#include "rieszlab/descriptors.hpp"
#include "rieszlab/kernels.hpp"
#include "rieszlab/witness.hpp"

using namespace rieszlab;

namespace {

const double kSqrt2Minus1 = std::sqrt(2.0) - 1.0;

// feasible Cantor fixture for the collapse demonstration: mu(stage 3) = 1/25
ArcUnion demo_cantor() {
    CantorScheme scheme;
    scheme.stages = {{3, Rational(13, 50)}, {3, Rational(1, 100)}, {3, Rational(1, 800)}};
    return cantor_stage(scheme, 3);
}

BohrWitnessConfig demo_config(int m) {
    BohrWitnessConfig cfg;
    cfg.alpha = kSqrt2Minus1;
    cfg.delta = 0.05;
    cfg.head_m = m;
    cfg.grid_resolution = 1 << 14;
    cfg.arc_length = Rational(1, 256);
    return cfg;
}

} // namespace

TEST_CASE("triangle coefficients") {
    TriangleCoefficients tc = triangle_coefficients(0.5, 4);
    CHECK(tc.coeff[0] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(tc.coeff[1] == doctest::Approx(1.0 / (M_PI * M_PI)).epsilon(1e-15));

    // proved bound dominates a long partial sum of the true tail
    TriangleCoefficients wide = triangle_coefficients(0.05, 100);
    CHECK(wide.tail_bound == doctest::Approx(2.0 / (M_PI * M_PI * 100.0)));
    double partial = 0.0;
    for (int m = 101; m <= 10000; ++m) {
        double s = std::sin(M_PI * m * 0.05) / (M_PI * m);
        partial += 2.0 * s * s;
    }
    CHECK(wide.tail_bound >= partial);

    for (double delta : {0.05, 0.125, 0.25, 0.5}) {
        TriangleCoefficients t = triangle_coefficients(delta, 50);
        for (int m = 1; m <= 50; ++m) {
            double cap = std::min(delta * delta, 1.0 / (M_PI * M_PI * m * m));
            CHECK(t.coeff[static_cast<size_t>(m)] <= cap + 1e-15);
        }
    }

    CHECK_THROWS_AS(triangle_coefficients(0.0, 5), BadDelta);
    CHECK_THROWS_AS(triangle_coefficients(0.7, 5), BadDelta);
}

TEST_CASE("find witness arc first fit") {
    ArcUnion tenth = ArcUnion::normalize({{Rational(0), Rational(1, 10)}});
    Arc a1 = find_witness_arc(tenth, {0.0}, Rational(1, 32));
    CHECK(a1.start == Rational(205, 2048));   // first 2^-12 lattice point past S
    CHECK(a1.length() == Rational(1, 32));

    Arc a2 = find_witness_arc(tenth, {}, Rational(1, 32));
    CHECK(a2.start == a1.start);

    // pigeonhole: complement split into 63 gaps of 1/8192 leaves no 1/16 arc
    CantorScheme fine;
    fine.stages = {{63, Rational(1, 8192)}};
    ArcUnion dense = cantor_stage(fine, 1);
    CHECK_THROWS_AS(find_witness_arc(dense, {0.0}, Rational(1, 16)), NoArcFound);

    // translates cannot be pairwise disjoint when the length exceeds the
    // minimum center distance
    std::vector<double> centers;
    for (int m = -40; m <= 40; ++m) centers.push_back(m * kSqrt2Minus1);
    CHECK_THROWS_AS(
        find_witness_arc(ArcUnion::normalize({{Rational(0), Rational(1, 100)}}),
                         centers, Rational(1, 64)),
        NoArcFound);
}

TEST_CASE("witness ratio edge cases") {
    BohrWitnessConfig cfg = demo_config(5);
    WitnessResult empty = witness_ratio(ArcUnion::empty_set(), cfg);
    CHECK(empty.ratio == 0.0);

    WitnessResult full = witness_ratio(ArcUnion::full(), cfg);
    CHECK(full.ratio == 1.0);

    BohrWitnessConfig coarse = cfg;
    coarse.arc_length = Rational(1, 8192);
    CHECK_THROWS_AS(witness_ratio(demo_cantor(), coarse), GridTooCoarse);

    BohrWitnessConfig bad = cfg;
    bad.delta = 0.3;
    CHECK_THROWS_AS(witness_ratio(demo_cantor(), bad), BadDelta);
    bad = cfg;
    bad.grid_resolution = 10000;
    CHECK_THROWS_AS(witness_ratio(demo_cantor(), bad), InvalidArgument);
}

TEST_CASE("witness ratio regression fixture") {
    ArcUnion s = demo_cantor();
    CHECK(s.measure() == Rational(1, 25));
    CHECK(s.arcs().size() == 64);

    WitnessResult r5 = witness_ratio(s, demo_config(5));
    CHECK(r5.arc.start == Rational(49, 4096));
    CHECK(r5.ratio == doctest::Approx(0.0372117520449).epsilon(1e-9));
    CHECK(r5.ratio >= 0.0);
    CHECK(r5.ratio <= 1.0);
    CHECK(r5.alpha_tail == doctest::Approx(2.0 / (M_PI * M_PI * 5.0)));
    CHECK(r5.beta_head > 0.0);
}

TEST_CASE("witness ratio is stable under grid doubling") {
    ArcUnion s = demo_cantor();
    for (int m : {5, 20}) {
        BohrWitnessConfig base = demo_config(m);
        if (m == 20) base.arc_length = Rational(1, 1024);
        WitnessResult coarse = witness_ratio(s, base);
        BohrWitnessConfig fine = base;
        fine.grid_resolution = 1 << 15;
        WitnessResult refined = witness_ratio(s, fine);
        CHECK(coarse.arc.start == refined.arc.start);
        CHECK(std::abs(coarse.ratio - refined.ratio) < 1e-3);
    }
}

TEST_CASE("witness ratio is deterministic under kernel parallelism") {
    ArcUnion s = demo_cantor();
    set_parallelism(1);
    WitnessResult serial = witness_ratio(s, demo_config(5));
    set_parallelism(8);
    WitnessResult parallel = witness_ratio(s, demo_config(5));
    set_parallelism(1);
    CHECK(serial.ratio == parallel.ratio);
}

TEST_CASE("witness sweep over the demo fixture") {
    ArcUnion s = demo_cantor();
    WitnessSweep sweep = witness_sweep(s, demo_config(5), {5, 10, 20, 40});
    REQUIRE(sweep.rows.size() == 4);

    // M = 5, 10, 20 succeed; the arc is re-searched (and auto-shrunk) per M
    for (size_t i = 0; i < 3; ++i) {
        REQUIRE(sweep.rows[i].result.has_value());
        CHECK(sweep.rows[i].result->ratio > 0.0);
        CHECK(sweep.rows[i].result->ratio <= 1.0);
    }
    CHECK(sweep.rows[2].result->arc_length < sweep.rows[0].result->arc_length);
    CHECK(sweep.rows[2].result->ratio <= sweep.rows[0].result->ratio);

    // M = 40 has no arc at this grid resolution; the sweep records the error
    // and keeps going
    CHECK_FALSE(sweep.rows[3].result.has_value());
    CHECK(sweep.rows[3].error.find("NoArcFound") != std::string::npos);

    CHECK(sweep.min_ratio == doctest::Approx(0.0118025251312).epsilon(1e-9));
    CHECK(sweep.below_target);

    WitnessSweep none = witness_sweep(s, demo_config(5), {});
    CHECK(none.rows.empty());
    CHECK_FALSE(none.below_target);

    WitnessSweep full = witness_sweep(ArcUnion::full(), demo_config(5), {5, 10});
    for (const auto& row : full.rows) {
        REQUIRE(row.result.has_value());
        CHECK(row.result->ratio == 1.0);
    }
}
