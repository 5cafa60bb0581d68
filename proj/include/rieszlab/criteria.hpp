#pragma once

#include <string>
#include <vector>

#include "rieszlab/arcs.hpp"
#include "rieszlab/sequences.hpp"

namespace rieszlab {

// Verdict record of a necessary/sufficient test.  Pass implies margin >= 0,
// fail implies margin < 0; an inconclusive verdict makes no margin claim and
// stores NaN there.
struct CriterionReport {
    enum class Verdict { Pass, Fail, Inconclusive };
    std::string criterion;
    Verdict verdict = Verdict::Inconclusive;
    double margin = 0.0;
    std::string params;
    std::string notes;

    const char* verdict_text() const {
        switch (verdict) {
            case Verdict::Pass: return "pass";
            case Verdict::Fail: return "fail";
            default: return "inconclusive";
        }
    }
};

// Density bound: upper Beurling density of Lambda must not exceed mu(S).
// margin = mu(S) - beurling_hi; a fail certifies the system is not a Riesz
// sequence (up to the windowed-estimator caveat recorded in the notes).
CriterionReport landau_necessary(const ArcUnion& s, const IndexSet& lambda);

// Interval criterion: if the longest arc of S has length T > 1/separation,
// the system is a Riesz sequence with certified lower bound
// eps1 = T - 1/separation.  Otherwise inconclusive.
CriterionReport montgomery_vaughan_sufficient(const ArcUnion& s,
                                              const IndexSet& lambda);

// Riesz-basis test for the arithmetic progression nZ + m: verdict follows the
// cover condition for S + {k/n}; tiling and ambiguity flags go to the notes.
// Independent of m (echoed in params).
CriterionReport arithmetic_riesz_basis(const ArcUnion& s, long long n,
                                       long long m);

// The n translates L + k, k in {0..n-1}, for a windowed-syndetic L with
// certified max_gap n.  Translates of regenerable sets come from the
// underlying infinite set windowed back to L's window, so their union covers
// every window integer; explicit member lists are translated as-is.
// gap_budget caps the accepted certificate (0 = window length / 16); a larger
// max_gap raises NotSyndetic.
std::vector<IndexSet> syndetic_decomposition(const IndexSet& lambda,
                                             long long gap_budget = 0);

struct GreedyResult {
    IndexSet selected;
    double verified_lambda_min = 0.0;   // post-hoc eigensolve of the final Gram
    double density = 0.0;               // |selected| / window length
};

// Deterministic greedy eigenvalue-threshold selector: scan the window outward
// from 0 and keep an index when lambda_min of the augmented Gram stays at or
// above the threshold.
GreedyResult greedy_riesz_subset(const ArcUnion& s, Window window,
                                 double threshold);

} // namespace rieszlab
