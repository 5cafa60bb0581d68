#include "rieszlab/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rieszlab/kernels.hpp"

namespace rieszlab {

namespace {

bool is_power_of_two(long long x) { return x > 0 && (x & (x - 1)) == 0; }

// m*alpha mod 1 snapped to the grid, as an exact rational in [0,1)
Rational snap_center(double alpha, long long m, long long grid) {
    double pos = static_cast<double>(m) * alpha;
    pos -= std::floor(pos);
    long long cell = std::llround(pos * static_cast<double>(grid)) % grid;
    return Rational(cell, grid);
}

} // namespace

void BohrWitnessConfig::validate() const {
    if (!(delta > 0.0 && delta <= 0.25))
        throw BadDelta("config delta must lie in (0, 1/4]");
    if (head_m < 1) throw InvalidArgument("config needs M >= 1");
    if (!is_power_of_two(grid_resolution) || grid_resolution < kMinGridResolution)
        throw InvalidArgument("grid_resolution must be a power of two >= 2^12");
    if (!(arc_length > Rational(0)))
        throw InvalidArgument("arc_length must be positive");
}

TriangleCoefficients triangle_coefficients(double delta, int m_max) {
    if (!(delta > 0.0 && delta <= 0.5))
        throw BadDelta("delta must lie in (0, 1/2]");
    if (m_max < 1) throw InvalidArgument("m_max must be >= 1");
    TriangleCoefficients tc;
    tc.coeff.resize(static_cast<size_t>(m_max) + 1);
    tc.coeff[0] = delta * delta;
    for (int m = 1; m <= m_max; ++m) {
        double s = std::sin(M_PI * m * delta) / (M_PI * m);
        tc.coeff[static_cast<size_t>(m)] = s * s;
    }
    tc.tail_bound = 2.0 / (M_PI * M_PI * static_cast<double>(m_max));
    return tc;
}

Arc find_witness_arc(const ArcUnion& s, const std::vector<double>& centers,
                     const Rational& length, long long grid) {
    if (!(length > Rational(0)))
        throw InvalidArgument("arc length must be positive");
    if (!is_power_of_two(grid) || grid < 2)
        throw InvalidArgument("snap grid must be a power of two >= 2");

    // pairwise disjointness of the translates I + c needs every circular
    // center distance to be at least the arc length
    std::vector<Rational> snapped;
    snapped.reserve(centers.size() + 1);
    snapped.emplace_back(0);
    for (double c : centers) snapped.push_back(snap_center(c, 1, grid));
    std::sort(snapped.begin(), snapped.end());
    snapped.erase(std::unique(snapped.begin(), snapped.end()), snapped.end());
    if (snapped.size() > 1) {
        Rational min_gap(1);
        for (size_t i = 0; i + 1 < snapped.size(); ++i)
            min_gap = std::min(min_gap, snapped[i + 1] - snapped[i], std::less<>{});
        min_gap = std::min(min_gap, Rational(1) - snapped.back() + snapped.front(),
                           std::less<>{});
        if (min_gap < length)
            throw NoArcFound("translates of length " + length.to_string() +
                             " cannot be pairwise disjoint at M this large");
    }

    // the valid region: complement of S intersected over all center shifts
    const ArcUnion comp = s.complement();
    ArcUnion valid = comp;
    for (const Rational& c : snapped) {
        if (valid.empty()) break;
        if (c == Rational(0)) continue;   // comp itself is the base
        valid = valid.intersect(comp.rotated(c));
    }
    for (const Arc& piece : valid.arcs()) {
        // first lattice candidate inside this piece
        long long j = (piece.start * Rational(kArcSearchLattice)).floor();
        for (; j <= kArcSearchLattice; ++j) {
            Rational cand(j, kArcSearchLattice);
            if (cand < piece.start) continue;
            if (piece.end < cand + length) break;
            return Arc{cand, cand + length};
        }
    }
    throw NoArcFound("no lattice arc of length " + length.to_string() +
                     " avoids all translated copies of S");
}

WitnessResult witness_ratio(const ArcUnion& s, const BohrWitnessConfig& config) {
    config.validate();
    const long long grid = config.grid_resolution;
    if (config.arc_length * Rational(grid) < Rational(8))
        throw GridTooCoarse("arc_length * grid_resolution must be >= 8");

    WitnessResult res;
    res.head_m = config.head_m;
    res.grid_resolution = grid;
    res.arc_length = config.arc_length;

    TriangleCoefficients head = triangle_coefficients(config.delta, config.head_m);
    res.alpha_tail = head.tail_bound;
    res.beta_head = 0.0;
    for (int m = -config.head_m; m <= config.head_m; ++m) {
        double w = head.coeff[static_cast<size_t>(std::abs(m))];
        res.beta_head += w * w;
    }

    if (s.is_full()) {
        // P_S is the identity; any arc gives ratio 1
        res.arc = Arc{Rational(0), config.arc_length};
        res.ratio = 1.0;
        return res;
    }

    std::vector<double> centers;
    centers.reserve(2 * static_cast<size_t>(config.head_m) + 1);
    for (int m = -config.head_m; m <= config.head_m; ++m)
        centers.push_back(static_cast<double>(m) * config.alpha);
    res.arc = find_witness_arc(s, centers, config.arc_length, grid);

    // nu * h truncated at M2, evaluated on the grid
    const int m2 = std::max(8 * config.head_m, 1024);
    TriangleCoefficients full = triangle_coefficients(config.delta, m2);
    std::vector<double> weights;
    std::vector<long long> shifts;
    weights.reserve(2 * static_cast<size_t>(m2) + 1);
    for (int m = -m2; m <= m2; ++m) {
        weights.push_back(full.coeff[static_cast<size_t>(std::abs(m))]);
        double pos = static_cast<double>(m) * config.alpha;
        pos -= std::floor(pos);
        shifts.push_back(std::llround(pos * static_cast<double>(grid)) % grid);
    }

    std::vector<std::uint8_t> arc_ind(static_cast<size_t>(grid), 0);
    for (long long g = (res.arc.start * Rational(grid)).floor();
         g < grid; ++g) {
        Rational t(g, grid);
        if (t < res.arc.start) continue;
        if (!(t < res.arc.end)) break;
        arc_ind[static_cast<size_t>(g)] = 1;
    }

    std::vector<double> v = circular_correlate(weights, shifts, arc_ind);
    std::vector<std::uint8_t> chi = sample_indicator(s, grid);

    double num = 0.0, den = 0.0;   // fixed-order reductions
    for (long long g = 0; g < grid; ++g) {
        double x = v[static_cast<size_t>(g)] * v[static_cast<size_t>(g)];
        den += x;
        if (chi[static_cast<size_t>(g)]) num += x;
    }
    res.ratio = den > 0.0 ? std::sqrt(num / den) : 0.0;
    return res;
}

WitnessSweep witness_sweep(const ArcUnion& s, const BohrWitnessConfig& base,
                           const std::vector<int>& head_ms, double target) {
    WitnessSweep sweep;
    sweep.target = target;
    sweep.min_ratio = std::numeric_limits<double>::quiet_NaN();
    for (int m : head_ms) {
        WitnessSweep::Row row;
        row.head_m = m;
        BohrWitnessConfig cfg = base;
        cfg.head_m = m;
        const Rational floor_len(8, base.grid_resolution);
        for (;;) {
            try {
                row.result = witness_ratio(s, cfg);
                row.error.clear();
                break;
            } catch (const NoArcFound& e) {
                row.error = e.what();
                Rational half = cfg.arc_length / Rational(2);
                if (half < floor_len) break;
                cfg.arc_length = half;
            } catch (const Error& e) {
                row.error = e.what();
                break;
            }
        }
        if (row.result) {
            double r = row.result->ratio;
            if (std::isnan(sweep.min_ratio) || r < sweep.min_ratio)
                sweep.min_ratio = r;
        }
        sweep.rows.push_back(std::move(row));
    }
    sweep.below_target = !std::isnan(sweep.min_ratio) && sweep.min_ratio < target;
    return sweep;
}

} // namespace rieszlab
