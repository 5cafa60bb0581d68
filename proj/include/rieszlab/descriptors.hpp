#pragma once

#include <string>
#include <vector>

#include "rieszlab/arcs.hpp"
#include "rieszlab/sequences.hpp"

namespace rieszlab {

// Parsed form of the set-description text format:
//   interval a b
//   union (a1 b1) (a2 b2) ...        (bare "union" is the empty set)
//   cantor c1:g1,c2:g2,... stage=n
// Rationals are written p/q (integers and plain decimals also accepted).
struct SetDescriptor {
    enum class Kind { Arcs, Cantor };
    Kind kind = Kind::Arcs;
    ArcUnion arcs;         // canonical, for Kind::Arcs
    CantorScheme scheme;   // for Kind::Cantor
    int stage = 0;

    ArcUnion resolve() const;
    // stage index for provenance: Cantor stage, or -1 for plain arc unions
    int cantor_stage_index() const { return kind == Kind::Cantor ? stage : -1; }
};

SetDescriptor parse_set_descriptor(const std::string& text);
std::string to_string(const SetDescriptor& d);

// Sequence descriptor text format:
//   periodic n m | bohr alpha delta | thue-morse | subst w0|w1
//   explicit k1,k2,... | random p seed
SeqDescriptor parse_seq_descriptor(const std::string& text);
std::string to_string(const SeqDescriptor& d);

// "2 01101001": radius m, then the table over 2^(2m-1) big-endian patterns.
BlockCode parse_block_code(const std::string& text);

// Numeric rendering used by all CLI output: 12 significant digits.
std::string format_number(double x);
// Full-precision rendering for descriptor round-trips.
std::string format_exact(double x);

} // namespace rieszlab
