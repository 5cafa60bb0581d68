#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rieszlab/errors.hpp"

namespace rieszlab {

// Finite truncation of Z.  F_n = {0,...,n-1} is Window(0, n-1); generated
// sequences prefer symmetric windows, but derived windows (block codes) may
// sit anywhere.
struct Window {
    long long lo = 0;
    long long hi = 0;
    long long length() const { return hi - lo + 1; }
    bool contains(long long k) const { return lo <= k && k <= hi; }
};

struct SubstitutionRule {
    std::string image0;   // image of 0
    std::string image1;   // image of 1
    bool is_thue_morse() const { return image0 == "01" && image1 == "10"; }
};

// Local rule of radius m: maps each pattern over positions -m+1..m-1 to one
// output symbol.  table has 2^(2m-1) entries; the pattern is read as a
// big-endian binary number (leftmost position = highest bit).
struct BlockCode {
    int radius;
    std::vector<std::uint8_t> table;
};

// Generator descriptor for an index set; prints/parses through the sequence
// descriptor text format (see descriptors.hpp).
struct SeqDescriptor {
    enum class Kind { Explicit, Periodic, Bohr, Substitution, Random };
    Kind kind = Kind::Explicit;

    std::vector<long long> members;   // Explicit
    long long period = 1;             // Periodic: n
    long long residue = 0;            // Periodic: m
    double alpha = 0.0;               // Bohr
    double delta = 0.0;               // Bohr
    SubstitutionRule rule;            // Substitution
    double prob = 0.0;                // Random
    std::uint64_t seed = 0;           // Random

    static SeqDescriptor periodic(long long n, long long m);
    static SeqDescriptor bohr(double alpha, double delta);
    static SeqDescriptor thue_morse();
    static SeqDescriptor substitution(SubstitutionRule r);
    static SeqDescriptor explicit_set(std::vector<long long> ks);
    static SeqDescriptor random(double p, std::uint64_t seed);
};

// Finite restriction of a subset of Z (equivalently of a binary bi-sequence)
// to a window, plus the descriptor that produced it.
struct IndexSet {
    Window window;
    std::vector<long long> members;   // strictly increasing, inside window
    SeqDescriptor generator;

    bool contains(long long k) const;
    std::size_t size() const { return members.size(); }
    // characteristic digits over the window, "0"/"1" per position
    std::string digits() const;
};

IndexSet generate(const SeqDescriptor& d, Window window);

struct DensityReport {
    double beurling_lo = 0.0;
    double beurling_hi = 0.0;
    double asymptotic_lo = 0.0;
    double asymptotic_hi = 0.0;
    long long separation = 0;
    long long window_k = 0;       // fixed k used by the Beurling estimators
    long long centered_k_lo = 0;  // centered-count range for the asymptotics
    long long centered_k_hi = 0;
};

// Windowed density estimators.  The Beurling pair scans all length-k integer
// blocks inside the window with k = floor(len/4); the asymptotic pair uses
// centered blocks [-k, k) over k in [hi/4, hi/2], clamped into the Beurling
// bracket.  Throws TooFewPoints when fewer than 2 members (separation).
DensityReport densities(const IndexSet& set);

struct PiecewiseRun {
    long long gap_bound = 0;
    long long run_lo = 0;
    long long run_hi = 0;
};

struct SyndeticReport {
    // smallest n such that every length-n subinterval of the window meets the
    // set; nullopt when no such n exists within the window (empty set)
    std::optional<long long> max_gap;
    long long thick_run = 0;   // longest block of consecutive members
    std::optional<PiecewiseRun> piecewise;
};

SyndeticReport syndetic_report(const IndexSet& set);

struct ApReport {
    IndexSet return_set;               // shifts k with window-agreement at radius m
    std::optional<long long> gap;      // max gap within the valid shift range
};

// Return times of the radius-m cylinder around the origin pattern:
// k qualifies when b(j-k) = b(j) for all |j| <= m-1, evaluated where the
// window permits.  Bounded gap for every tested m is the windowed
// minimality certificate.
ApReport almost_periodic_check(const IndexSet& b, int m);

// Applies the radius-m local rule; output window shrinks by m-1 on each side.
IndexSet sliding_block_code(const IndexSet& b, const BlockCode& code);

// Windowed refinement heuristic: recenter on the longest gap-bounded run
// found by syndetic_report and return that pattern; nullopt when the input
// has no qualifying run.
std::optional<IndexSet> syndetic_refine(const IndexSet& set);

} // namespace rieszlab
