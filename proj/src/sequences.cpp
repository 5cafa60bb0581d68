#include "rieszlab/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace rieszlab {

namespace {

void check_window(const Window& w) {
    if (w.lo > w.hi)
        throw InvalidArgument("window [" + std::to_string(w.lo) + "," +
                              std::to_string(w.hi) + "] is empty");
}

double circle_dist(double x) {
    double d = x - std::floor(x);   // into [0,1)
    return std::min(d, 1.0 - d);
}

// One-sided fixed point of the substitution starting from symbol 0; needs
// image0 to start with '0' so iteration converges symbol-wise.
std::string substitution_fixed_point(const SubstitutionRule& rule, size_t needed) {
    if (rule.image0.empty() || rule.image1.empty())
        throw BadDescriptor("substitution images must be nonempty");
    for (char c : rule.image0 + rule.image1)
        if (c != '0' && c != '1')
            throw BadDescriptor("substitution images must be binary words");
    if (rule.image0[0] != '0')
        throw BadDescriptor("substitution has no fixed point starting at 0");
    std::string t = "0";
    for (int iter = 0; iter < 64 && t.size() < needed; ++iter) {
        std::string next;
        next.reserve(t.size() * 2);
        for (char c : t) next += (c == '0') ? rule.image0 : rule.image1;
        if (next.size() == t.size()) break;
        t = std::move(next);
    }
    if (t.size() < needed)
        throw BadDescriptor("substitution does not grow to the window size");
    return t;
}

// Largest member-free subinterval of [lo,hi]; members sorted, nonempty.
long long longest_free_run(const std::vector<long long>& members, long long lo,
                           long long hi) {
    long long run = std::max(members.front() - lo, hi - members.back());
    for (size_t i = 0; i + 1 < members.size(); ++i)
        run = std::max(run, members[i + 1] - members[i] - 1);
    return run;
}

} // namespace

SeqDescriptor SeqDescriptor::periodic(long long n, long long m) {
    SeqDescriptor d;
    d.kind = Kind::Periodic;
    d.period = n;
    d.residue = m;
    return d;
}

SeqDescriptor SeqDescriptor::bohr(double alpha, double delta) {
    SeqDescriptor d;
    d.kind = Kind::Bohr;
    d.alpha = alpha;
    d.delta = delta;
    return d;
}

SeqDescriptor SeqDescriptor::thue_morse() {
    return substitution({"01", "10"});
}

SeqDescriptor SeqDescriptor::substitution(SubstitutionRule r) {
    SeqDescriptor d;
    d.kind = Kind::Substitution;
    d.rule = std::move(r);
    return d;
}

SeqDescriptor SeqDescriptor::explicit_set(std::vector<long long> ks) {
    SeqDescriptor d;
    d.kind = Kind::Explicit;
    d.members = std::move(ks);
    return d;
}

SeqDescriptor SeqDescriptor::random(double p, std::uint64_t seed) {
    SeqDescriptor d;
    d.kind = Kind::Random;
    d.prob = p;
    d.seed = seed;
    return d;
}

bool IndexSet::contains(long long k) const {
    return std::binary_search(members.begin(), members.end(), k);
}

std::string IndexSet::digits() const {
    std::string out(static_cast<size_t>(window.length()), '0');
    for (long long m : members) out[static_cast<size_t>(m - window.lo)] = '1';
    return out;
}

IndexSet generate(const SeqDescriptor& d, Window window) {
    check_window(window);
    IndexSet set;
    set.window = window;
    set.generator = d;
    switch (d.kind) {
        case SeqDescriptor::Kind::Explicit: {
            std::vector<long long> ms = d.members;
            std::sort(ms.begin(), ms.end());
            ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
            for (long long k : ms)
                if (window.contains(k)) set.members.push_back(k);
            break;
        }
        case SeqDescriptor::Kind::Periodic: {
            if (d.period < 1) throw BadDescriptor("periodic needs n >= 1");
            long long r = ((d.residue % d.period) + d.period) % d.period;
            long long first = window.lo + (((r - window.lo) % d.period) + d.period) % d.period;
            for (long long k = first; k <= window.hi; k += d.period)
                set.members.push_back(k);
            break;
        }
        case SeqDescriptor::Kind::Bohr: {
            if (!(d.delta > 0.0 && d.delta <= 0.5))
                throw BadDescriptor("bohr needs delta in (0, 1/2]");
            for (long long k = window.lo; k <= window.hi; ++k)
                if (circle_dist(static_cast<double>(k) * d.alpha) < d.delta)
                    set.members.push_back(k);
            break;
        }
        case SeqDescriptor::Kind::Substitution: {
            size_t needed = static_cast<size_t>(
                std::max(window.hi, -window.lo - 1) + 1);
            std::string t = substitution_fixed_point(d.rule, std::max<size_t>(needed, 1));
            // two-sided extension mirrors the one-sided fixed point:
            // b(k) = t(k) for k >= 0 and b(k) = t(-k-1) for k < 0
            for (long long k = window.lo; k <= window.hi; ++k) {
                size_t idx = k >= 0 ? static_cast<size_t>(k)
                                    : static_cast<size_t>(-k - 1);
                if (t[idx] == '1') set.members.push_back(k);
            }
            break;
        }
        case SeqDescriptor::Kind::Random: {
            if (!(d.prob >= 0.0 && d.prob <= 1.0))
                throw BadDescriptor("random needs p in [0,1]");
            std::mt19937_64 rng(d.seed);
            constexpr double kInv53 = 1.0 / 9007199254740992.0;   // 2^-53
            for (long long k = window.lo; k <= window.hi; ++k) {
                double u = static_cast<double>(rng() >> 11) * kInv53;
                if (u < d.prob) set.members.push_back(k);
            }
            break;
        }
    }
    return set;
}

DensityReport densities(const IndexSet& set) {
    const Window& w = set.window;
    const long long len = w.length();
    if (len < 16) throw WindowTooSmall("densities needs window length >= 16");
    if (set.members.size() < 2)
        throw TooFewPoints("separation needs at least 2 members");

    DensityReport rep;
    rep.separation = w.length();
    for (size_t i = 0; i + 1 < set.members.size(); ++i)
        rep.separation = std::min(rep.separation,
                                  set.members[i + 1] - set.members[i]);

    // prefix[i] = #members < lo + i
    std::vector<long long> prefix(static_cast<size_t>(len) + 1, 0);
    {
        size_t mi = 0;
        for (long long i = 0; i < len; ++i) {
            prefix[static_cast<size_t>(i + 1)] = prefix[static_cast<size_t>(i)];
            if (mi < set.members.size() && set.members[mi] == w.lo + i) {
                ++prefix[static_cast<size_t>(i + 1)];
                ++mi;
            }
        }
    }
    auto count_in = [&](long long a, long long b) {   // members in [a, b)
        a = std::max(a, w.lo);
        b = std::min(b, w.hi + 1);
        if (a >= b) return 0LL;
        return prefix[static_cast<size_t>(b - w.lo)] -
               prefix[static_cast<size_t>(a - w.lo)];
    };

    const long long k = len / 4;
    rep.window_k = k;
    long long cmin = k, cmax = 0;
    for (long long a = w.lo; a + k <= w.hi + 1; ++a) {
        long long c = count_in(a, a + k);
        cmin = std::min(cmin, c);
        cmax = std::max(cmax, c);
    }
    rep.beurling_lo = static_cast<double>(cmin) / static_cast<double>(k);
    rep.beurling_hi = static_cast<double>(cmax) / static_cast<double>(k);

    rep.centered_k_lo = std::max<long long>(1, w.hi / 4);
    rep.centered_k_hi = std::max<long long>(1, w.hi / 2);
    double alo = 1.0, ahi = 0.0;
    for (long long kk = rep.centered_k_lo; kk <= rep.centered_k_hi; ++kk) {
        double dens = static_cast<double>(count_in(-kk, kk)) /
                      static_cast<double>(2 * kk);
        alo = std::min(alo, dens);
        ahi = std::max(ahi, dens);
    }
    // keep the asymptotic pair inside the Beurling bracket
    rep.asymptotic_lo = std::clamp(alo, rep.beurling_lo, rep.beurling_hi);
    rep.asymptotic_hi = std::clamp(ahi, rep.beurling_lo, rep.beurling_hi);
    return rep;
}

SyndeticReport syndetic_report(const IndexSet& set) {
    check_window(set.window);
    SyndeticReport rep;
    if (set.members.empty()) return rep;   // unbounded gap, no runs

    rep.max_gap = longest_free_run(set.members, set.window.lo, set.window.hi) + 1;

    long long best = 1, cur = 1;
    for (size_t i = 0; i + 1 < set.members.size(); ++i) {
        cur = (set.members[i + 1] == set.members[i] + 1) ? cur + 1 : 1;
        best = std::max(best, cur);
    }
    rep.thick_run = best;

    // smallest n for which some run with internal gaps <= n spans at least
    // one eighth of the window; candidate gaps are capped at len/64 so runs
    // held together by window-scale jumps do not count as structure
    std::vector<long long> diffs;
    for (size_t i = 0; i + 1 < set.members.size(); ++i)
        diffs.push_back(set.members[i + 1] - set.members[i]);
    std::sort(diffs.begin(), diffs.end());
    diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
    const long long len = set.window.length();
    const long long gap_budget = std::max<long long>(1, len / 64);
    for (long long n : diffs) {
        if (n > gap_budget) break;
        long long run_start = set.members[0];
        long long prev = set.members[0];
        PiecewiseRun found{n, 0, 0};
        bool ok = false;
        for (size_t i = 1; i <= set.members.size(); ++i) {
            bool chain = i < set.members.size() && set.members[i] - prev <= n;
            if (!chain) {
                if ((prev - run_start + 1) * 8 >= len &&
                    (!ok || prev - run_start > found.run_hi - found.run_lo)) {
                    found.run_lo = run_start;
                    found.run_hi = prev;
                    ok = true;
                }
                if (i < set.members.size()) run_start = set.members[i];
            }
            if (i < set.members.size()) prev = set.members[i];
        }
        if (ok) {
            rep.piecewise = found;
            break;
        }
    }
    return rep;
}

ApReport almost_periodic_check(const IndexSet& b, int m) {
    check_window(b.window);
    if (m < 1) throw InvalidArgument("almost_periodic_check needs m >= 1");
    const long long len = b.window.length();
    if (2LL * m - 1 > len / 4)
        throw WindowTooSmall("pattern radius too large: need 2m-1 <= window length / 4");
    if (b.window.lo > -(m - 1) || b.window.hi < m - 1)
        throw WindowTooSmall("window must contain the pattern positions [-m+1, m-1]");

    const long long k_lo = (m - 1) - b.window.hi;
    const long long k_hi = -(m - 1) - b.window.lo;

    ApReport rep;
    rep.return_set.window = {k_lo, k_hi};
    for (long long k = k_lo; k <= k_hi; ++k) {
        bool agrees = true;
        for (long long j = -(m - 1); j <= m - 1 && agrees; ++j)
            agrees = b.contains(j - k) == b.contains(j);
        if (agrees) rep.return_set.members.push_back(k);
    }
    rep.return_set.generator =
        SeqDescriptor::explicit_set(rep.return_set.members);

    if (!rep.return_set.members.empty()) {
        long long gap =
            longest_free_run(rep.return_set.members, k_lo, k_hi) + 1;
        // report a bounded gap only when it certifies more than half the range
        if (gap <= (k_hi - k_lo + 1) / 2) rep.gap = gap;
    }
    return rep;
}

IndexSet sliding_block_code(const IndexSet& b, const BlockCode& code) {
    check_window(b.window);
    const int m = code.radius;
    if (m < 1) throw InvalidArgument("block code radius must be >= 1");
    const size_t patterns = static_cast<size_t>(1) << (2 * m - 1);
    if (code.table.size() != patterns)
        throw InvalidArgument("block code table must have 2^(2m-1) entries");
    Window out{b.window.lo + (m - 1), b.window.hi - (m - 1)};
    if (out.lo > out.hi)
        throw WindowTooSmall("window shrinks to nothing under radius " +
                             std::to_string(m));
    IndexSet res;
    res.window = out;
    for (long long k = out.lo; k <= out.hi; ++k) {
        size_t idx = 0;
        for (long long j = k - (m - 1); j <= k + (m - 1); ++j)
            idx = (idx << 1) | (b.contains(j) ? 1u : 0u);
        if (code.table[idx]) res.members.push_back(k);
    }
    res.generator = SeqDescriptor::explicit_set(res.members);
    return res;
}

std::optional<IndexSet> syndetic_refine(const IndexSet& set) {
    SyndeticReport rep = syndetic_report(set);
    if (!rep.piecewise) return std::nullopt;
    const PiecewiseRun& run = *rep.piecewise;
    long long mid = (run.run_lo + run.run_hi) / 2;
    if ((run.run_lo + run.run_hi) % 2 != 0 && run.run_lo + run.run_hi < 0) --mid;

    IndexSet out;
    out.window = {run.run_lo - mid, run.run_hi - mid};
    for (long long k : set.members)
        if (run.run_lo <= k && k <= run.run_hi) out.members.push_back(k - mid);
    out.generator = SeqDescriptor::explicit_set(out.members);
    return out;
}

} // namespace rieszlab
