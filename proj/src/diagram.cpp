#include "kauffman/diagram.hpp"

#include <algorithm>
#include <sstream>

namespace kauffman {

void Diagram::check() const {
    if (free_loops < 0) throw malformed_diagram("negative free loop count");
    std::map<int, int> seen;  // port -> occurrences across crossings
    for (const auto& c : crossings)
        for (int p : c.port)
            if (++seen[p] > 1) throw malformed_diagram("duplicate port label");
    if (arcs.size() != crossings.size() * 4)
        throw malformed_diagram("arc matching does not cover all ports");
    for (const auto& [p, q] : arcs) {
        if (!seen.count(p) || !seen.count(q))
            throw malformed_diagram("arc endpoint is not a crossing port");
        if (p == q) throw malformed_diagram("arc from a port to itself");
        auto it = arcs.find(q);
        if (it == arcs.end() || it->second != p)
            throw malformed_diagram("arcs are not an involution");
    }
}

Diagram Diagram::mirrored() const {
    Diagram r = *this;
    for (auto& c : r.crossings) c.over_a = !c.over_a;
    return r;
}

Diagram Diagram::disjoint_union(const Diagram& other) const {
    int maxp = 0;
    for (const auto& c : crossings)
        for (int p : c.port) maxp = std::max(maxp, p + 1);
    Diagram r = *this;
    for (const auto& c : other.crossings) {
        Crossing nc = c;
        for (int& p : nc.port) p += maxp;
        r.crossings.push_back(nc);
    }
    for (const auto& [p, q] : other.arcs) r.arcs[p + maxp] = q + maxp;
    r.free_loops += other.free_loops;
    return r;
}

Diagram Diagram::parse(const std::string& text) {
    Diagram d;
    std::map<long, std::vector<int>> label_ports;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "X") {
            long lab[4];
            std::string over;
            if (!(ls >> lab[0] >> lab[1] >> lab[2] >> lab[3] >> over) ||
                (over != "A" && over != "B"))
                throw malformed_diagram("bad crossing line: " + line);
            const int ci = static_cast<int>(d.crossings.size());
            Crossing c;
            c.over_a = over == "A";
            for (int k = 0; k < 4; ++k) {
                c.port[k] = 4 * ci + k;
                label_ports[lab[k]].push_back(c.port[k]);
            }
            d.crossings.push_back(c);
        } else if (tok == "loops") {
            if (!(ls >> d.free_loops) || d.free_loops < 0)
                throw malformed_diagram("bad loops line: " + line);
        } else {
            throw malformed_diagram("unexpected token '" + tok + "'");
        }
        if (std::string extra; ls >> extra)
            throw malformed_diagram("trailing tokens on line: " + line);
    }
    for (const auto& [lab, ports] : label_ports) {
        if (ports.size() != 2)
            throw malformed_diagram("label " + std::to_string(lab) +
                                    " appears " + std::to_string(ports.size()) +
                                    " times (want 2)");
        d.arcs[ports[0]] = ports[1];
        d.arcs[ports[1]] = ports[0];
    }
    d.check();
    return d;
}

std::string Diagram::to_text() const {
    std::map<int, long> label;
    long next = 0;
    for (const auto& [p, q] : arcs) {
        if (label.count(p)) continue;
        label[p] = next;
        label[q] = next;
        ++next;
    }
    std::ostringstream out;
    for (const auto& c : crossings) {
        out << "X";
        for (int p : c.port) out << " " << label.at(p);
        out << " " << (c.over_a ? "A" : "B") << "\n";
    }
    if (free_loops > 0) out << "loops " << free_loops << "\n";
    return out.str();
}

std::array<int, 4> DiagramBuilder::add_crossing(bool over_a) {
    std::array<int, 4> ids;
    for (int k = 0; k < 4; ++k) {
        ids[k] = static_cast<int>(nodes_.size());
        nodes_.push_back({});
        node_is_port_.push_back(true);
    }
    flags_.push_back(over_a);
    crossing_nodes_.push_back(ids);
    return ids;
}

std::array<int, 2> DiagramBuilder::add_wire() {
    const int a = static_cast<int>(nodes_.size());
    nodes_.push_back({});
    nodes_.push_back({});
    node_is_port_.push_back(false);
    node_is_port_.push_back(false);
    nodes_[a].internal = a + 1;
    nodes_[a + 1].internal = a;
    return {a, a + 1};
}

void DiagramBuilder::join(int a, int b) {
    if (a == b || nodes_[a].joined >= 0 || nodes_[b].joined >= 0)
        throw malformed_diagram("invalid join in diagram assembly");
    nodes_[a].joined = b;
    nodes_[b].joined = a;
}

Diagram DiagramBuilder::finish() const {
    for (const auto& n : nodes_)
        if (n.joined < 0) throw malformed_diagram("open end left after assembly");

    Diagram d;
    std::map<int, int> port_of_node;  // builder node -> diagram port
    for (std::size_t ci = 0; ci < crossing_nodes_.size(); ++ci) {
        Crossing c;
        c.over_a = flags_[ci];
        for (int k = 0; k < 4; ++k) {
            c.port[k] = static_cast<int>(4 * ci + k);
            port_of_node.emplace(crossing_nodes_[ci][k], c.port[k]);
        }
        d.crossings.push_back(c);
    }

    std::vector<bool> seen(nodes_.size(), false);
    // Arcs: follow joined/internal chains from each port to the next port.
    for (const auto& [node, port] : port_of_node) {
        if (seen[node]) continue;
        seen[node] = true;
        int cur = nodes_[node].joined;
        while (!node_is_port_[cur]) {
            seen[cur] = true;
            cur = nodes_[cur].internal;
            seen[cur] = true;
            cur = nodes_[cur].joined;
        }
        seen[cur] = true;
        d.arcs[port] = port_of_node.at(cur);
        d.arcs[port_of_node.at(cur)] = port;
    }
    // Remaining unvisited wires form crossing-free loops.
    d.free_loops = free_loops_from_leftover_(seen);
    d.check();
    return d;
}

int DiagramBuilder::free_loops_from_leftover_(std::vector<bool>& seen) const {
    int loops = 0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (seen[i] || node_is_port_[i]) continue;
        ++loops;
        int cur = static_cast<int>(i);
        while (!seen[cur]) {
            seen[cur] = true;
            const int other = nodes_[cur].internal;
            seen[other] = true;
            cur = nodes_[other].joined;
        }
    }
    return loops;
}

namespace {

struct Region {
    int nw, ne, sw, se;
};

// A stack of |count| vertical crossings; positive count means left-hand
// twists (NW-SE strand over).
Region vertical_region(DiagramBuilder& b, long count) {
    const bool over_a = count > 0;
    const long n = count > 0 ? count : -count;
    Region r{-1, -1, -1, -1};
    std::array<int, 4> prev{};
    for (long i = 0; i < n; ++i) {
        auto c = b.add_crossing(over_a);
        if (i == 0) {
            r.nw = c[kNW];
            r.ne = c[kNE];
        } else {
            b.join(prev[kSW], c[kNW]);
            b.join(prev[kSE], c[kNE]);
        }
        prev = c;
    }
    r.sw = prev[kSW];
    r.se = prev[kSE];
    return r;
}

// A row of |count| horizontal crossings; positive count means left-hand
// horizontal twists (the rotated crossing, NE-SW strand over).
Region horizontal_region(DiagramBuilder& b, long count) {
    const bool over_a = count < 0;
    const long n = count > 0 ? count : -count;
    Region r{-1, -1, -1, -1};
    std::array<int, 4> prev{};
    for (long i = 0; i < n; ++i) {
        auto c = b.add_crossing(over_a);
        if (i == 0) {
            r.nw = c[kNW];
            r.sw = c[kSW];
        } else {
            b.join(prev[kNE], c[kNW]);
            b.join(prev[kSE], c[kSW]);
        }
        prev = c;
    }
    r.ne = prev[kNE];
    r.se = prev[kSE];
    return r;
}

}  // namespace

Diagram build_diagram(const FractionNotation& f) {
    FractionNotation::from_entries(f.entries);  // revalidate

    DiagramBuilder b;
    // The juxtaposition identity: two horizontal strands.
    auto top = b.add_wire();
    auto bottom = b.add_wire();
    Region t{top[0], top[1], bottom[0], bottom[1]};

    // b1 twists, juxtaposed on the right.
    Region r = vertical_region(b, f.entries[0]);
    b.join(t.ne, r.nw);
    b.join(t.se, r.sw);
    t.ne = r.ne;
    t.se = r.se;

    for (std::size_t i = 1; i + 1 < f.entries.size(); i += 2) {
        // d_i horizontal twists, juxtaposed on the right.
        r = horizontal_region(b, f.entries[i]);
        b.join(t.ne, r.nw);
        b.join(t.se, r.sw);
        t.ne = r.ne;
        t.se = r.se;
        // b_{i+1} vertical twists, concatenated below.
        r = vertical_region(b, f.entries[i + 1]);
        b.join(t.sw, r.nw);
        b.join(t.se, r.ne);
        t.sw = r.sw;
        t.se = r.se;
    }

    // Closure caps along the left and right sides, so that the two-vertical-
    // strands element closes into two loops.
    b.join(t.nw, t.sw);
    b.join(t.ne, t.se);
    return b.finish();
}

}  // namespace kauffman
