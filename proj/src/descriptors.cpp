#include "rieszlab/descriptors.hpp"

#include <cstdio>
#include <sstream>

namespace rieszlab {

namespace {

std::vector<std::string> split_ws(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string> split_on(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

long long parse_int(const std::string& tok, const char* what) {
    try {
        size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw BadDescriptor(std::string("bad ") + what + ": " + tok);
    }
}

double parse_real(const std::string& tok, const char* what) {
    try {
        size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw BadDescriptor(std::string("bad ") + what + ": " + tok);
    }
}

} // namespace

ArcUnion SetDescriptor::resolve() const {
    if (kind == Kind::Arcs) return arcs;
    return cantor_stage(scheme, stage);
}

SetDescriptor parse_set_descriptor(const std::string& text) {
    auto toks = split_ws(text);
    if (toks.empty()) throw BadDescriptor("empty set descriptor");
    SetDescriptor d;
    const std::string& head = toks[0];
    if (head == "interval") {
        if (toks.size() != 3)
            throw BadDescriptor("interval needs two endpoints: " + text);
        d.kind = SetDescriptor::Kind::Arcs;
        d.arcs = ArcUnion::normalize(
            {{Rational::parse(toks[1]), Rational::parse(toks[2])}}, true);
        return d;
    }
    if (head == "union") {
        // re-join and split on parentheses: union (a b) (c d)
        std::string rest = text.substr(text.find("union") + 5);
        std::vector<std::pair<Rational, Rational>> raw;
        size_t pos = 0;
        while ((pos = rest.find('(', pos)) != std::string::npos) {
            size_t close = rest.find(')', pos);
            if (close == std::string::npos)
                throw BadDescriptor("unclosed parenthesis in: " + text);
            auto pair = split_ws(rest.substr(pos + 1, close - pos - 1));
            if (pair.size() != 2)
                throw BadDescriptor("each union arc needs two endpoints: " + text);
            raw.emplace_back(Rational::parse(pair[0]), Rational::parse(pair[1]));
            pos = close + 1;
        }
        d.kind = SetDescriptor::Kind::Arcs;
        d.arcs = raw.empty() ? ArcUnion::empty_set() : ArcUnion::normalize(raw, true);
        return d;
    }
    if (head == "cantor") {
        if (toks.size() != 3)
            throw BadDescriptor("cantor needs stages and stage=n: " + text);
        d.kind = SetDescriptor::Kind::Cantor;
        for (const std::string& st : split_on(toks[1], ',')) {
            auto parts = split_on(st, ':');
            if (parts.size() != 2)
                throw BadDescriptor("cantor stage must be count:gap, got " + st);
            CantorScheme::Stage stage;
            stage.count = static_cast<int>(parse_int(parts[0], "cantor count"));
            stage.gap = Rational::parse(parts[1]);
            d.scheme.stages.push_back(stage);
        }
        if (toks[2].rfind("stage=", 0) != 0)
            throw BadDescriptor("cantor needs stage=n, got " + toks[2]);
        d.stage = static_cast<int>(parse_int(toks[2].substr(6), "cantor stage"));
        if (d.stage < 0 || static_cast<size_t>(d.stage) > d.scheme.stages.size())
            throw BadDescriptor("cantor stage outside scheme: " + text);
        return d;
    }
    throw BadDescriptor("unknown set descriptor: " + head);
}

std::string to_string(const SetDescriptor& d) {
    if (d.kind == SetDescriptor::Kind::Cantor) {
        std::string out = "cantor ";
        for (size_t i = 0; i < d.scheme.stages.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(d.scheme.stages[i].count) + ":" +
                   d.scheme.stages[i].gap.to_string();
        }
        return out + " stage=" + std::to_string(d.stage);
    }
    const auto& arcs = d.arcs.arcs();
    if (arcs.size() == 1)
        return "interval " + arcs[0].start.to_string() + " " +
               arcs[0].end.to_string();
    std::string out = "union";
    for (const Arc& a : arcs)
        out += " (" + a.start.to_string() + " " + a.end.to_string() + ")";
    return out;
}

SeqDescriptor parse_seq_descriptor(const std::string& text) {
    auto toks = split_ws(text);
    if (toks.empty()) throw BadDescriptor("empty sequence descriptor");
    const std::string& head = toks[0];
    if (head == "periodic") {
        if (toks.size() != 3) throw BadDescriptor("periodic needs n and m: " + text);
        long long n = parse_int(toks[1], "period");
        if (n < 1) throw BadDescriptor("periodic needs n >= 1");
        return SeqDescriptor::periodic(n, parse_int(toks[2], "residue"));
    }
    if (head == "bohr") {
        if (toks.size() != 3)
            throw BadDescriptor("bohr needs alpha and delta: " + text);
        double alpha = parse_real(toks[1], "alpha");
        double delta = parse_real(toks[2], "delta");
        if (!(delta > 0.0 && delta <= 0.5))
            throw BadDescriptor("bohr delta must lie in (0, 1/2]");
        return SeqDescriptor::bohr(alpha, delta);
    }
    if (head == "thue-morse") {
        if (toks.size() != 1) throw BadDescriptor("thue-morse takes no arguments");
        return SeqDescriptor::thue_morse();
    }
    if (head == "subst") {
        if (toks.size() != 2) throw BadDescriptor("subst needs w0|w1: " + text);
        auto words = split_on(toks[1], '|');
        if (words.size() != 2) throw BadDescriptor("subst needs w0|w1: " + text);
        return SeqDescriptor::substitution({words[0], words[1]});
    }
    if (head == "explicit") {
        std::vector<long long> ks;
        if (toks.size() > 2) throw BadDescriptor("explicit list must be comma-separated");
        if (toks.size() == 2)
            for (const std::string& k : split_on(toks[1], ','))
                if (!k.empty()) ks.push_back(parse_int(k, "member"));
        return SeqDescriptor::explicit_set(std::move(ks));
    }
    if (head == "random") {
        if (toks.size() != 3) throw BadDescriptor("random needs p and seed: " + text);
        double p = parse_real(toks[1], "probability");
        if (!(p >= 0.0 && p <= 1.0)) throw BadDescriptor("random needs p in [0,1]");
        long long seed = parse_int(toks[2], "seed");
        return SeqDescriptor::random(p, static_cast<std::uint64_t>(seed));
    }
    throw BadDescriptor("unknown sequence descriptor: " + head);
}

std::string to_string(const SeqDescriptor& d) {
    switch (d.kind) {
        case SeqDescriptor::Kind::Periodic:
            return "periodic " + std::to_string(d.period) + " " +
                   std::to_string(d.residue);
        case SeqDescriptor::Kind::Bohr:
            return "bohr " + format_exact(d.alpha) + " " + format_exact(d.delta);
        case SeqDescriptor::Kind::Substitution:
            if (d.rule.is_thue_morse()) return "thue-morse";
            return "subst " + d.rule.image0 + "|" + d.rule.image1;
        case SeqDescriptor::Kind::Random:
            return "random " + format_exact(d.prob) + " " + std::to_string(d.seed);
        case SeqDescriptor::Kind::Explicit:
        default: {
            std::string out = "explicit";
            for (size_t i = 0; i < d.members.size(); ++i)
                out += (i ? "," : " ") + std::to_string(d.members[i]);
            return out;
        }
    }
}

BlockCode parse_block_code(const std::string& text) {
    auto toks = split_ws(text);
    if (toks.size() != 2)
        throw BadDescriptor("block code needs radius and table bits: " + text);
    BlockCode code;
    code.radius = static_cast<int>(parse_int(toks[0], "block code radius"));
    if (code.radius < 1 || code.radius > 8)
        throw BadDescriptor("block code radius must lie in [1,8]");
    const size_t want = static_cast<size_t>(1) << (2 * code.radius - 1);
    if (toks[1].size() != want)
        throw BadDescriptor("block code table needs " + std::to_string(want) +
                            " bits, got " + std::to_string(toks[1].size()));
    for (char c : toks[1]) {
        if (c != '0' && c != '1')
            throw BadDescriptor("block code table must be binary");
        code.table.push_back(c == '1' ? 1 : 0);
    }
    return code;
}

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string format_exact(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace rieszlab
