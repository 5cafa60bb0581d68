#include "rieszlab/arcs.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace rieszlab {

namespace {

const Rational kZero(0);
const Rational kOne(1);

std::vector<Arc> merge_sorted(std::vector<Arc> parts) {
    std::sort(parts.begin(), parts.end(), [](const Arc& a, const Arc& b) {
        return a.start < b.start;
    });
    std::vector<Arc> out;
    for (const Arc& a : parts) {
        if (!out.empty() && a.start <= out.back().end) {
            if (out.back().end < a.end) out.back().end = a.end;
        } else {
            out.push_back(a);
        }
    }
    return out;
}

} // namespace

ArcUnion ArcUnion::normalize(const std::vector<std::pair<Rational, Rational>>& raw,
                             bool allow_wrap) {
    std::vector<Arc> parts;
    parts.reserve(raw.size() + 4);
    for (const auto& [s0, e0] : raw) {
        if (s0 == e0) throw ZeroLengthArc("arc with start == end at " + s0.to_string());
        if (!allow_wrap) {
            if (s0 < kZero || e0 > kOne || e0 < s0)
                throw OutOfRange("arc [" + s0.to_string() + "," + e0.to_string() +
                                 ") outside [0,1]");
            parts.push_back({s0, e0});
            continue;
        }
        Rational len = e0 - s0;
        if (len < kZero) len = len + kOne;   // wrap expressed as end < start
        if (len > kOne || len == kZero)
            throw OutOfRange("arc [" + s0.to_string() + "," + e0.to_string() +
                             ") has length outside (0,1]");
        Rational s = s0.mod(1);
        Rational e = s + len;
        if (e <= kOne) {
            parts.push_back({s, e});
        } else {
            parts.push_back({s, kOne});
            parts.push_back({kZero, e - kOne});
        }
    }
    ArcUnion u;
    u.arcs_ = merge_sorted(std::move(parts));
    return u;
}

ArcUnion ArcUnion::full() {
    ArcUnion u;
    u.arcs_ = {Arc{kZero, kOne}};
    return u;
}

ArcUnion ArcUnion::empty_set() { return ArcUnion(); }

bool ArcUnion::is_full() const {
    return arcs_.size() == 1 && arcs_[0].start == kZero && arcs_[0].end == kOne;
}

Rational ArcUnion::measure() const {
    Rational m(0);
    for (const Arc& a : arcs_) m += a.length();
    return m;
}

Rational ArcUnion::longest_arc_length() const {
    Rational m(0);
    for (const Arc& a : arcs_) m = std::max(m, a.length(), std::less<>{});
    return m;
}

ArcUnion ArcUnion::complement() const {
    ArcUnion out;
    Rational prev = kZero;
    for (const Arc& a : arcs_) {
        if (prev < a.start) out.arcs_.push_back({prev, a.start});
        prev = a.end;
    }
    if (prev < kOne) out.arcs_.push_back({prev, kOne});
    return out;
}

ArcUnion ArcUnion::rotated(const Rational& theta) const {
    std::vector<std::pair<Rational, Rational>> raw;
    raw.reserve(arcs_.size());
    for (const Arc& a : arcs_) raw.emplace_back(a.start + theta, a.end + theta);
    return raw.empty() ? empty_set() : normalize(raw, true);
}

ArcUnion ArcUnion::intersect(const ArcUnion& other) const {
    ArcUnion out;
    size_t i = 0, j = 0;
    while (i < arcs_.size() && j < other.arcs_.size()) {
        const Arc& a = arcs_[i];
        const Arc& b = other.arcs_[j];
        Rational lo = std::max(a.start, b.start, std::less<>{});
        Rational hi = std::min(a.end, b.end, std::less<>{});
        if (lo < hi) out.arcs_.push_back({lo, hi});
        if (a.end < b.end)
            ++i;
        else
            ++j;
    }
    return out;
}

bool ArcUnion::contains(const Rational& t) const {
    Rational x = t.mod(1);
    for (const Arc& a : arcs_) {
        if (a.start <= x && x < a.end) return true;
        if (x < a.start) break;
    }
    return false;
}

double sinpi(const Rational& x) {
    return std::sin(M_PI * x.mod(2).to_double());
}

double cospi(const Rational& x) {
    return std::cos(M_PI * x.mod(2).to_double());
}

std::complex<double> fourier_coefficient(const ArcUnion& s, long long k) {
    if (k == 0) return {s.measure().to_double(), 0.0};
    std::complex<double> sum(0.0, 0.0);
    const double pk = M_PI * static_cast<double>(k);
    for (const Arc& a : s.arcs()) {
        // integral over [a,b) of e^{-2 pi i k t} dt
        //   = e^{-i pi k (a+b)} sin(pi k (b-a)) / (pi k)
        Rational phase = Rational(k) * (a.start + a.end);
        double amp = sinpi(Rational(k) * a.length()) / pk;
        sum += std::complex<double>(cospi(phase), -sinpi(phase)) * amp;
    }
    return sum;
}

ArcUnion cantor_stage(const CantorScheme& scheme, int n) {
    if (n < 0 || static_cast<size_t>(n) > scheme.stages.size())
        throw InvalidArgument("cantor stage " + std::to_string(n) +
                              " outside scheme with " +
                              std::to_string(scheme.stages.size()) + " stages");
    ArcUnion current = ArcUnion::full();
    for (int i = 0; i < n; ++i) {
        const auto& st = scheme.stages[static_cast<size_t>(i)];
        if (st.count < 1 || st.gap <= Rational(0))
            throw InvalidArgument("cantor stage needs count >= 1 and gap > 0");
        std::vector<std::pair<Rational, Rational>> next;
        next.reserve(current.arcs().size() * (st.count + 1));
        for (const Arc& a : current.arcs()) {
            Rational deleted = Rational(st.count) * st.gap;
            if (!(deleted < a.length()))
                throw SchemeOverdelete(
                    "stage " + std::to_string(i + 1) + " deletes " +
                    deleted.to_string() + " from an arc of length " +
                    a.length().to_string());
            Rational remnant = (a.length() - deleted) / Rational(st.count + 1);
            Rational pos = a.start;
            for (int j = 0; j <= st.count; ++j) {
                next.emplace_back(pos, pos + remnant);
                pos = pos + remnant + st.gap;
            }
        }
        current = ArcUnion::normalize(next, false);
    }
    return current;
}

CoverReport translate_cover_report(const ArcUnion& s,
                                   const std::vector<Rational>& shifts) {
    CoverReport report;
    report.uncovered_measure = Rational(1);
    if (s.empty() || shifts.empty()) {
        report.covers = report.tiles = false;
        report.max_multiplicity = 0;
        return report;
    }
    // +1/-1 sweep over all shifted endpoints; multiplicity is piecewise
    // constant between consecutive breakpoints.
    std::map<Rational, int> delta;
    for (const Rational& shift : shifts) {
        ArcUnion moved = s.rotated(shift.mod(1));
        for (const Arc& a : moved.arcs()) {
            delta[a.start] += 1;
            delta[a.end] -= 1;
        }
    }
    delta[Rational(0)] += 0;
    delta[Rational(1)] += 0;
    Rational uncovered(0);
    int mult = 0, max_mult = 0;
    Rational prev(0);
    for (const auto& [point, d] : delta) {
        if (prev < point) {
            if (mult == 0) uncovered += point - prev;
            max_mult = std::max(max_mult, mult);
        }
        mult += d;
        prev = point;
    }
    report.uncovered_measure = uncovered;
    report.covers = uncovered == Rational(0);
    report.max_multiplicity = max_mult;
    report.tiles = report.covers && max_mult == 1;
    return report;
}

} // namespace rieszlab
