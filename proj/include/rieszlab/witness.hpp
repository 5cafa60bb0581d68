#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rieszlab/arcs.hpp"

namespace rieszlab {

// Candidate arc starts live on a fixed lattice of denominator 2^12, so the
// chosen arc does not move when the quadrature grid is refined.
inline constexpr long long kArcSearchLattice = 1 << 12;
inline constexpr long long kMinGridResolution = 1 << 12;

// Parameters of the Bohr non-Riesz experiment on the circle: the Bohr set is
// {k : dist(k*alpha, 0) < delta}, the atom weights come from V = (-delta/2,
// delta/2), and the finite Dirac head covers |m| <= M.
struct BohrWitnessConfig {
    double alpha = 0.0;
    double delta = 0.0;            // in (0, 1/4]
    int head_m = 1;                // M
    long long grid_resolution = 1 << 14;   // power of two >= 2^12
    Rational arc_length{1, 256};

    void validate() const;
};

struct TriangleCoefficients {
    std::vector<double> coeff;   // coeff[|m|], m = 0..M
    double tail_bound = 0.0;     // proved bound on the mass beyond M
};

// Fourier weights of the triangle function built from V = (-delta/2, delta/2):
// f^(0) = delta^2, f^(m) = (sin(pi m delta) / (pi m))^2.  The tail bound
// 2/(pi^2 M) dominates the true tail.  delta in (0, 1/2].
TriangleCoefficients triangle_coefficients(double delta, int m_max);

// First-fit search for an arc I of the given length with I and every I - c
// (c in centers, snapped to 1/grid) disjoint from S, and all translates I + c
// pairwise disjoint.  Candidates run over the fixed search lattice; the
// disjointness certificate is exact rational arithmetic at the snap
// resolution.  Throws NoArcFound when no candidate qualifies (shrink the
// length or deepen the Cantor stage).
Arc find_witness_arc(const ArcUnion& s, const std::vector<double>& centers,
                     const Rational& length,
                     long long grid = kArcSearchLattice);

struct WitnessResult {
    Arc arc;
    double ratio = 0.0;        // ||P_S (nu*h)|| / ||nu*h|| on the grid
    double alpha_tail = 0.0;   // bound on the weight mass beyond M
    double beta_head = 0.0;    // sum of squared weights up to M
    int stage = -1;            // Cantor stage of S when known to the caller
    int head_m = 0;
    long long grid_resolution = 0;
    Rational arc_length;
};

// Grid-quadrature realization of the collapse ratio: h is the normalized
// indicator of the witness arc, nu*h is summed over |m| <= max(8M, 1024) with
// triangle weights at snapped Dirac positions, and P_S multiplies by the
// exact per-cell indicator of S.  A full-measure S short-circuits to ratio 1.
WitnessResult witness_ratio(const ArcUnion& s, const BohrWitnessConfig& config);

struct WitnessSweep {
    struct Row {
        int head_m = 0;
        std::optional<WitnessResult> result;
        std::string error;   // error code + message when the cell failed
    };
    std::vector<Row> rows;
    double min_ratio = 0.0;       // over successful rows; NaN when none
    double target = 0.0;
    bool below_target = false;    // min_ratio < target
};

// One witness_ratio per M, re-searching the arc each time.  When the
// configured arc length finds nothing the sweep halves it until the grid
// resolution bound 8/grid; a cell that still fails becomes an error row and
// the sweep continues.
WitnessSweep witness_sweep(const ArcUnion& s, const BohrWitnessConfig& base,
                           const std::vector<int>& head_ms,
                           double target = 0.2);

} // namespace rieszlab
