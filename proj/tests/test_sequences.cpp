#include <doctest.h>

#include <bit>
#include <random>

#include "rieszlab/sequences.hpp"

using namespace rieszlab;

namespace {

// parity of ones in binary(k), the direct Thue-Morse oracle
int tm_parity(long long k) {
    return std::popcount(static_cast<unsigned long long>(k)) & 1;
}

std::vector<long long> members_of(const SeqDescriptor& d, Window w) {
    return generate(d, w).members;
}

} // namespace

TEST_CASE("periodic generator") {
    CHECK(members_of(SeqDescriptor::periodic(3, 1), {-5, 5}) ==
          std::vector<long long>{-5, -2, 1, 4});
    CHECK(members_of(SeqDescriptor::periodic(1, 0), {-2, 2}) ==
          std::vector<long long>{-2, -1, 0, 1, 2});
    CHECK_THROWS_AS(generate(SeqDescriptor::periodic(0, 0), {-5, 5}),
                    BadDescriptor);
}

TEST_CASE("thue-morse matches the parity oracle and the displayed digits") {
    IndexSet tm = generate(SeqDescriptor::thue_morse(), {0, 15});
    CHECK(tm.members == std::vector<long long>{1, 2, 4, 7, 8, 11, 13, 14});
    CHECK(tm.digits() == "0110100110010110");

    IndexSet two_sided = generate(SeqDescriptor::thue_morse(), {-8, 15});
    CHECK(two_sided.digits() == "100101100110100110010110");

    for (long long k = -200; k <= 200; ++k) {
        bool expect = k >= 0 ? tm_parity(k) : tm_parity(-k - 1);
        IndexSet window = generate(SeqDescriptor::thue_morse(), {k, k});
        CHECK(window.contains(k) == (expect == 1));
    }
}

TEST_CASE("substitution self-similarity") {
    // the rule image of the [0, 2^j) prefix is the [0, 2^{j+1}) prefix
    for (int j = 2; j <= 6; ++j) {
        long long n = 1LL << j;
        std::string prefix = generate(SeqDescriptor::thue_morse(), {0, n - 1}).digits();
        std::string doubled =
            generate(SeqDescriptor::thue_morse(), {0, 2 * n - 1}).digits();
        std::string image;
        for (char c : prefix) image += (c == '0') ? "01" : "10";
        CHECK(image == doubled);
    }
}

TEST_CASE("bohr generator") {
    CHECK(members_of(SeqDescriptor::bohr(1.0 / 3.0, 0.2), {0, 9}) ==
          std::vector<long long>{0, 3, 6, 9});
    // rational alpha gives a periodic set
    auto ms = members_of(SeqDescriptor::bohr(0.25, 0.1), {-40, 40});
    for (long long m : ms) CHECK(m % 4 == 0);
    CHECK_THROWS_AS(generate(SeqDescriptor::bohr(0.5, 0.9), {0, 10}),
                    BadDescriptor);
}

TEST_CASE("random generator is deterministic per seed") {
    auto a = members_of(SeqDescriptor::random(0.5, 12345), {-500, 500});
    auto b = members_of(SeqDescriptor::random(0.5, 12345), {-500, 500});
    auto c = members_of(SeqDescriptor::random(0.5, 54321), {-500, 500});
    CHECK(a == b);
    CHECK(a != c);
    double density = static_cast<double>(a.size()) / 1001.0;
    CHECK(density > 0.4);
    CHECK(density < 0.6);
}

TEST_CASE("densities on periodic sets are exact") {
    for (long long n : {2LL, 4LL, 5LL}) {
        DensityReport rep =
            densities(generate(SeqDescriptor::periodic(n, 1), {-1000, 1000}));
        double expect = 1.0 / static_cast<double>(n);
        CHECK(rep.beurling_lo == expect);
        CHECK(rep.beurling_hi == expect);
        CHECK(rep.asymptotic_lo == expect);
        CHECK(rep.asymptotic_hi == expect);
        CHECK(rep.separation == n);
    }
}

TEST_CASE("densities on the half-line") {
    IndexSet halfline;
    halfline.window = {-1000, 1000};
    for (long long k = 0; k <= 1000; ++k) halfline.members.push_back(k);
    DensityReport rep = densities(halfline);
    CHECK(rep.beurling_hi == 1.0);
    CHECK(rep.beurling_lo == 0.0);
    CHECK(std::abs(rep.asymptotic_lo - 0.5) < 0.01);
    CHECK(std::abs(rep.asymptotic_hi - 0.5) < 0.01);
}

TEST_CASE("densities on thue-morse support") {
    IndexSet tm = generate(SeqDescriptor::thue_morse(), {-1024, 1024});
    double direct = static_cast<double>(tm.members.size()) / 2049.0;
    CHECK(std::abs(direct - 0.5) < 0.01);
    DensityReport rep = densities(tm);
    CHECK(rep.beurling_lo <= 0.5);
    CHECK(rep.beurling_hi >= 0.5);
    CHECK(std::abs(rep.asymptotic_lo - 0.5) < 0.05);
    CHECK(std::abs(rep.asymptotic_hi - 0.5) < 0.05);
    CHECK(rep.beurling_lo <= rep.asymptotic_lo);
    CHECK(rep.asymptotic_lo <= rep.asymptotic_hi);
    CHECK(rep.asymptotic_hi <= rep.beurling_hi);
}

TEST_CASE("densities errors") {
    IndexSet single;
    single.window = {-20, 20};
    single.members = {0};
    CHECK_THROWS_AS(densities(single), TooFewPoints);
    CHECK_THROWS_AS(densities(generate(SeqDescriptor::periodic(2, 0), {0, 7})),
                    WindowTooSmall);
}

TEST_CASE("syndetic report fixtures") {
    SyndeticReport r1 =
        syndetic_report(generate(SeqDescriptor::periodic(3, 1), {-99, 99}));
    REQUIRE(r1.max_gap.has_value());
    CHECK(*r1.max_gap == 3);

    IndexSet squares;
    squares.window = {0, 400};
    for (long long k = 0; k * k <= 400; ++k) squares.members.push_back(k * k);
    SyndeticReport r2 = syndetic_report(squares);
    REQUIRE(r2.max_gap.has_value());
    CHECK(*r2.max_gap == 39);
    CHECK(*r2.max_gap > 10);   // not syndetic at gap budget 10
    CHECK_FALSE(r2.piecewise.has_value());

    IndexSet blocks;   // (2Z) intersected with dyadic blocks [4^j, 2*4^j)
    blocks.window = {0, 2048};
    for (long long base = 4; base <= 1024; base *= 4)
        for (long long k = base; k < 2 * base && k <= 2048; k += 2)
            blocks.members.push_back(k);
    SyndeticReport r3 = syndetic_report(blocks);
    REQUIRE(r3.piecewise.has_value());
    CHECK(r3.piecewise->gap_bound == 2);

    SyndeticReport empty = syndetic_report(IndexSet{{0, 100}, {}, {}});
    CHECK_FALSE(empty.max_gap.has_value());
}

TEST_CASE("thick runs") {
    IndexSet blocks;
    blocks.window = {0, 100};
    for (long long k : {3LL, 4LL, 5LL, 6LL, 20LL, 21LL, 50LL})
        blocks.members.push_back(k);
    CHECK(syndetic_report(blocks).thick_run == 4);
}

TEST_CASE("almost periodic check") {
    // period-4 comb: every return time is a multiple of 4
    ApReport r1 = almost_periodic_check(
        generate(SeqDescriptor::periodic(4, 0), {-64, 64}), 3);
    REQUIRE(r1.gap.has_value());
    CHECK(*r1.gap == 4);
    CHECK(r1.return_set.contains(0));
    for (long long k : r1.return_set.members) CHECK(k % 4 == 0);

    // thue-morse is almost periodic: finite gap at m = 2 (value from scan)
    ApReport r2 = almost_periodic_check(
        generate(SeqDescriptor::thue_morse(), {-512, 512}), 2);
    REQUIRE(r2.gap.has_value());
    CHECK(*r2.gap > 0);

    // the half-line pattern 0...01... recurs nowhere else
    IndexSet halfline;
    halfline.window = {-256, 256};
    for (long long k = 0; k <= 256; ++k) halfline.members.push_back(k);
    ApReport r3 = almost_periodic_check(halfline, 2);
    CHECK(r3.return_set.members == std::vector<long long>{0});
    CHECK_FALSE(r3.gap.has_value());

    CHECK_THROWS_AS(almost_periodic_check(halfline, 70), WindowTooSmall);
}

TEST_CASE("sliding block codes") {
    IndexSet tm = generate(SeqDescriptor::thue_morse(), {-64, 64});

    BlockCode identity{1, {0, 1}};
    IndexSet same = sliding_block_code(tm, identity);
    CHECK(same.members == tm.members);
    CHECK(same.window.lo == tm.window.lo);

    BlockCode ones{1, {1, 1}};
    IndexSet all = sliding_block_code(tm, ones);
    CHECK(all.members.size() == static_cast<size_t>(all.window.length()));

    // m=2: output(k) = b(k) xor b(k+1); table index is the big-endian pattern
    // (b(k-1), b(k), b(k+1))
    BlockCode xor_next{2, {0, 1, 1, 0, 0, 1, 1, 0}};
    IndexSet coded = sliding_block_code(tm, xor_next);
    CHECK(coded.window.lo == -63);
    CHECK(coded.window.hi == 63);
    for (long long k = coded.window.lo; k <= coded.window.hi; ++k) {
        bool expect = tm.contains(k) != tm.contains(k + 1);
        CHECK(coded.contains(k) == expect);
    }
}

TEST_CASE("block code equivariance") {
    // code(shift(b)) = shift(code(b)) on the common window
    BlockCode xor_next{2, {0, 1, 1, 0, 0, 1, 1, 0}};
    IndexSet tm = generate(SeqDescriptor::thue_morse(), {-128, 128});
    IndexSet coded = sliding_block_code(tm, xor_next);
    for (long long shift : {-32LL, -7LL, 5LL, 17LL, 32LL}) {
        IndexSet shifted;
        shifted.window = {tm.window.lo + shift, tm.window.hi + shift};
        for (long long m : tm.members) shifted.members.push_back(m + shift);
        IndexSet coded_shifted = sliding_block_code(shifted, xor_next);
        for (long long k = coded_shifted.window.lo; k <= coded_shifted.window.hi; ++k) {
            long long unshifted = k - shift;
            if (unshifted < coded.window.lo || unshifted > coded.window.hi) continue;
            CHECK(coded_shifted.contains(k) == coded.contains(unshifted));
        }
    }
    CHECK_THROWS_AS(sliding_block_code(generate(SeqDescriptor::thue_morse(), {0, 1}),
                                       xor_next),
                    WindowTooSmall);
}

TEST_CASE("windowed syndeticity survives shifts") {
    // max_gap(L) = n implies max_gap(shift_k(L)) = n for in-window shifts
    IndexSet tm = generate(SeqDescriptor::thue_morse(), {-256, 256});
    auto base = syndetic_report(tm);
    REQUIRE(base.max_gap.has_value());
    for (long long shift : {-33LL, 12LL, 61LL}) {
        IndexSet moved;
        moved.window = {tm.window.lo + shift, tm.window.hi + shift};
        for (long long m : tm.members) moved.members.push_back(m + shift);
        auto rep = syndetic_report(moved);
        REQUIRE(rep.max_gap.has_value());
        CHECK(*rep.max_gap == *base.max_gap);
    }
}

TEST_CASE("syndetic refine") {
    IndexSet evens = generate(SeqDescriptor::periodic(2, 0), {-64, 64});
    auto refined = syndetic_refine(evens);
    REQUIRE(refined.has_value());
    CHECK(refined->members == evens.members);

    IndexSet block;   // 2Z restricted to [512, 1024) inside [0, 2048]
    block.window = {0, 2048};
    for (long long k = 512; k < 1024; k += 2) block.members.push_back(k);
    auto r2 = syndetic_refine(block);
    REQUIRE(r2.has_value());
    auto rep = syndetic_report(*r2);
    REQUIRE(rep.max_gap.has_value());
    CHECK(*rep.max_gap == 2);
    CHECK(r2->window.lo < 0);
    CHECK(r2->window.hi > 0);

    IndexSet squares;
    squares.window = {0, 400};
    for (long long k = 0; k * k <= 400; ++k) squares.members.push_back(k * k);
    CHECK_FALSE(syndetic_refine(squares).has_value());
}

TEST_CASE("generate determinism") {
    for (const SeqDescriptor& d :
         {SeqDescriptor::periodic(7, 3), SeqDescriptor::bohr(0.414, 0.1),
          SeqDescriptor::thue_morse(), SeqDescriptor::random(0.3, 99)}) {
        CHECK(members_of(d, {-300, 300}) == members_of(d, {-300, 300}));
    }
}
