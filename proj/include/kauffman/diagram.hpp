#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kauffman/notation.hpp"

namespace kauffman {

struct malformed_diagram : std::runtime_error {
    explicit malformed_diagram(const std::string& msg)
        : std::runtime_error("malformed diagram: " + msg) {}
};

/// One crossing of a 4-valent diagram. Ports are listed in corner order
/// NW, NE, SW, SE; the two strands run along the diagonals NW-SE and NE-SW.
/// over_a marks the NW-SE diagonal as the over-strand (a left-hand crossing
/// when the strands run vertically); otherwise NE-SW is over.
struct Crossing {
    std::array<int, 4> port;
    bool over_a;
};

constexpr int kNW = 0, kNE = 1, kSW = 2, kSE = 3;

/// Combinatorial link diagram: crossings, a perfect matching of all ports
/// into arcs, and a count of crossing-free closed components.
struct Diagram {
    std::vector<Crossing> crossings;
    std::map<int, int> arcs;  // involution on ports (both directions stored)
    int free_loops = 0;

    /// Throws malformed_diagram unless arcs is a fixed-point-free involution
    /// covering each crossing port exactly once.
    void check() const;

    /// Flip every over-strand flag.
    Diagram mirrored() const;

    /// Side-by-side union; the other diagram's ports are relabeled.
    Diagram disjoint_union(const Diagram& other) const;

    /// Parses the text format: one `X <NW> <NE> <SW> <SE> <A|B>` line per
    /// crossing (arcs implicit through shared port labels, each label
    /// appearing exactly twice) and an optional `loops <k>` line. `#` starts
    /// a comment.
    static Diagram parse(const std::string& text);
    std::string to_text() const;
};

/// Incremental tangle assembler used to realize a notation as a diagram.
/// Tracks four open corner ends (NW, NE, SW, SE) while crossings and wires
/// are glued in; finish() resolves wire chains into the final arc matching.
class DiagramBuilder {
public:
    /// Adds a crossing and returns its four port node handles (NW,NE,SW,SE).
    std::array<int, 4> add_crossing(bool over_a);
    /// Adds a crossing-free strand; returns its two end handles.
    std::array<int, 2> add_wire();
    /// Glues two open ends together.
    void join(int a, int b);
    /// Resolves wires and joins into a Diagram; every end must be glued.
    Diagram finish() const;

private:
    struct Node {
        int internal = -1;  // other end of the same wire, or -1 for a port
        int joined = -1;    // glued counterpart
    };
    int free_loops_from_leftover_(std::vector<bool>& seen) const;

    std::vector<Node> nodes_;
    std::vector<bool> node_is_port_;
    std::vector<bool> flags_;           // over_a per crossing
    std::vector<std::array<int, 4>> crossing_nodes_;
};

/// Realizes a continued-fraction notation as a diagram: start from the
/// two-horizontal-strands tangle, juxtapose the b1 vertical twist region on
/// the right, then alternately juxtapose horizontal twist regions (d_i) and
/// concatenate vertical twist regions (b_{i+1}) below, and finally close
/// with caps on the left and right sides. Positive entries are left-hand
/// twists.
Diagram build_diagram(const FractionNotation& f);

}  // namespace kauffman
