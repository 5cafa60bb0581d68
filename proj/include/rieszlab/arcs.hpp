#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "rieszlab/rational.hpp"

namespace rieszlab {

// Half-open arc [start, end) on the circle R/Z with exact rational endpoints,
// 0 <= start < end <= 1.  Arcs that wrap past 1 are stored split.
struct Arc {
    Rational start;
    Rational end;
    Rational length() const { return end - start; }
};

// Canonical finite union of arcs: pairwise disjoint, non-abutting, sorted by
// start.  Endpoint conventions are measure-zero and never affect a computed
// quantity.
class ArcUnion {
  public:
    ArcUnion() = default;

    // Canonicalizes a raw arc list.  With allow_wrap, endpoints are reduced
    // mod 1 and arcs crossing 0 are split; without it, endpoints must already
    // satisfy 0 <= start < end <= 1.
    static ArcUnion normalize(const std::vector<std::pair<Rational, Rational>>& raw,
                              bool allow_wrap = true);

    static ArcUnion full();        // [0,1)
    static ArcUnion empty_set();   // {}

    const std::vector<Arc>& arcs() const { return arcs_; }
    bool empty() const { return arcs_.empty(); }
    bool is_full() const;

    Rational measure() const;
    Rational longest_arc_length() const;   // 0 for the empty set

    ArcUnion complement() const;
    ArcUnion rotated(const Rational& theta) const;     // S + theta mod 1
    ArcUnion intersect(const ArcUnion& other) const;

    bool contains(const Rational& t) const;            // t taken mod 1

  private:
    std::vector<Arc> arcs_;
};

// Closed-form chi_S^(k) = integral over S of e^{-2 pi i k t} dt.
std::complex<double> fourier_coefficient(const ArcUnion& s, long long k);

// Staged Cantor construction: at each stage, from every arc currently
// present, delete `count` equally spaced open arcs of absolute length `gap`,
// leaving count+1 equal closed remnants.
struct CantorScheme {
    struct Stage {
        int count;
        Rational gap;
    };
    std::vector<Stage> stages;
};

// Stage 0 is the full circle; stage n requires n <= stages.size().
// Throws SchemeOverdelete when a stage's deletions do not fit.
ArcUnion cantor_stage(const CantorScheme& scheme, int n);

struct CoverReport {
    bool covers = false;
    bool tiles = false;
    Rational uncovered_measure;
    int max_multiplicity = 0;
};

// Exact cover/tiling test for the union of S + shift over the given shifts,
// computed on the common refinement of all shifted endpoints.
CoverReport translate_cover_report(const ArcUnion& s,
                                   const std::vector<Rational>& shifts);

// sin(pi x) / cos(pi x) with the argument reduced mod 2 in exact arithmetic,
// so large rational multiples of pi lose no precision.
double sinpi(const Rational& x);
double cospi(const Rational& x);

} // namespace rieszlab
