#include "kauffman/oracle.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "kauffman/pipeline.hpp"

namespace kauffman {

namespace {

// Corner coordinates of the port slots NW, NE, SW, SE.
constexpr int kCornerX[4] = {-1, 1, -1, 1};
constexpr int kCornerY[4] = {1, 1, -1, -1};

int diagonal_of_slot(int slot) { return (slot == kNW || slot == kSE) ? 0 : 1; }
int partner_slot(int slot) { return slot ^ 3; }  // NW<->SE, NE<->SW

// Joins the far ends of the arcs at ports a and b (both arcs are consumed);
// bumps free_loops when a and b were directly arced to each other.
void weld(Diagram& d, int a, int b) {
    const int pa = d.arcs.at(a);
    const int pb = d.arcs.at(b);
    d.arcs.erase(a);
    d.arcs.erase(b);
    if (pa == b) {  // then pb == a as well
        ++d.free_loops;
        return;
    }
    d.arcs[pa] = pb;
    d.arcs[pb] = pa;
}

Diagram smoothed(const Diagram& d, std::size_t ci, bool vertical) {
    Diagram r = d;
    const auto& p = r.crossings[ci].port;
    if (vertical) {
        weld(r, p[kNW], p[kSW]);
        weld(r, p[kNE], p[kSE]);
    } else {
        weld(r, p[kNW], p[kNE]);
        weld(r, p[kSW], p[kSE]);
    }
    r.crossings.erase(r.crossings.begin() + static_cast<long>(ci));
    return r;
}

// Removes crossing-free loops and kinks in place, multiplying their delta and
// alpha factors into `factor`.
void simplify(Diagram& d, RatFunc& factor) {
    bool changed = true;
    while (changed) {
        changed = false;
        if (d.free_loops > 0) {
            factor *= delta().pow(d.free_loops);
            d.free_loops = 0;
        }
        for (std::size_t ci = 0; ci < d.crossings.size(); ++ci) {
            const auto& p = d.crossings[ci].port;
            const bool over_a = d.crossings[ci].over_a;
            // Adjacent self-arc pairs: (kink pair, leftover pair, alpha sign).
            struct KinkCase {
                int a, b, c, e;
                long alpha_for_over_a;
            };
            static constexpr KinkCase cases[] = {
                {kNW, kNE, kSW, kSE, -1},  // cap on top
                {kSW, kSE, kNW, kNE, -1},  // cap on bottom
                {kNW, kSW, kNE, kSE, 1},   // cap on the left
                {kNE, kSE, kNW, kSW, 1},   // cap on the right
            };
            bool removed = false;
            for (const auto& k : cases) {
                if (d.arcs.at(p[k.a]) != p[k.b]) continue;
                factor *= RatFunc::alpha(over_a ? k.alpha_for_over_a
                                                : -k.alpha_for_over_a);
                d.arcs.erase(p[k.a]);
                d.arcs.erase(p[k.b]);
                weld(d, p[k.c], p[k.e]);
                d.crossings.erase(d.crossings.begin() + static_cast<long>(ci));
                removed = true;
                break;
            }
            if (removed) {
                changed = true;
                break;
            }
        }
    }
}

struct Pass {
    int component = -1;
    int entry_slot = -1;
};

struct Traversal {
    int components = 0;
    long first_bad = -1;                       // crossing index, -1 if none
    std::vector<std::array<Pass, 2>> passes;   // per crossing, per diagonal
    std::vector<int> port_order;               // ports in first-touch order
};

Traversal traverse(const Diagram& d, bool reverse_order) {
    std::unordered_map<int, std::pair<int, int>> at;  // port -> (crossing, slot)
    for (std::size_t ci = 0; ci < d.crossings.size(); ++ci)
        for (int k = 0; k < 4; ++k)
            at[d.crossings[ci].port[k]] = {static_cast<int>(ci), k};

    Traversal t;
    t.passes.assign(d.crossings.size(), {});
    std::vector<int> ports;
    ports.reserve(at.size());
    for (const auto& [p, loc] : at) ports.push_back(p);
    std::sort(ports.begin(), ports.end());
    if (reverse_order) std::reverse(ports.begin(), ports.end());

    std::vector<bool> seen_port;  // indexed via position in port_order
    std::unordered_map<int, bool> touched;
    for (int p : ports) touched[p] = false;

    for (int start : ports) {
        const auto [sci, sslot] = at.at(start);
        if (t.passes[sci][diagonal_of_slot(sslot)].component >= 0) continue;
        const int comp = t.components++;
        int p = start;
        do {
            const auto [ci, slot] = at.at(p);
            const int diag = diagonal_of_slot(slot);
            auto& pass = t.passes[ci][diag];
            pass.component = comp;
            pass.entry_slot = slot;
            const bool fresh = t.passes[ci][1 - diag].component < 0;
            const int over_diag = d.crossings[ci].over_a ? 0 : 1;
            if (fresh && diag != over_diag && t.first_bad < 0)
                t.first_bad = ci;
            if (!touched.at(p)) {
                touched[p] = true;
                t.port_order.push_back(p);
            }
            const int exit = d.crossings[ci].port[partner_slot(slot)];
            if (!touched.at(exit)) {
                touched[exit] = true;
                t.port_order.push_back(exit);
            }
            p = d.arcs.at(exit);
        } while (p != start);
    }
    return t;
}

// Self-writhe of a descending diagram: sum of signs over crossings whose two
// passes lie on the same component, with the sign read from the over- and
// under-pass directions.
long self_writhe(const Diagram& d, const Traversal& t) {
    long w = 0;
    for (std::size_t ci = 0; ci < d.crossings.size(); ++ci) {
        const auto& over = t.passes[ci][d.crossings[ci].over_a ? 0 : 1];
        const auto& under = t.passes[ci][d.crossings[ci].over_a ? 1 : 0];
        if (over.component != under.component) continue;
        auto dir = [](const Pass& p, int& x, int& y) {
            const int exit = partner_slot(p.entry_slot);
            x = kCornerX[exit] - kCornerX[p.entry_slot];
            y = kCornerY[exit] - kCornerY[p.entry_slot];
        };
        int ux, uy, vx, vy;
        dir(over, ux, uy);
        dir(under, vx, vy);
        w += (ux * vy - uy * vx) < 0 ? 1 : -1;
    }
    return w;
}

// Deterministic relabeling-based encoding of a simplified diagram, used as
// the memo key. Ports are renumbered in the order the least-port traversal
// first touches them.
std::string canonical_key(const Diagram& d, const Traversal& t) {
    std::unordered_map<int, int> relabel;
    relabel.reserve(t.port_order.size());
    for (int p : t.port_order)
        relabel.emplace(p, static_cast<int>(relabel.size()));

    std::vector<std::array<int, 5>> rows;
    rows.reserve(d.crossings.size());
    for (const auto& c : d.crossings) {
        std::array<int, 5> row{relabel.at(c.port[0]), relabel.at(c.port[1]),
                               relabel.at(c.port[2]), relabel.at(c.port[3]),
                               c.over_a ? 1 : 0};
        rows.push_back(row);
    }
    std::sort(rows.begin(), rows.end());
    std::ostringstream out;
    for (const auto& r : rows) {
        for (int v : r) out << v << ',';
        out << ';';
    }
    out << '|';
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [p, q] : d.arcs) {
        const int a = relabel.at(p), b = relabel.at(q);
        if (a < b) pairs.emplace_back(a, b);
    }
    std::sort(pairs.begin(), pairs.end());
    for (const auto& [a, b] : pairs) out << a << '-' << b << ';';
    return out.str();
}

class Evaluator {
public:
    explicit Evaluator(const OracleOptions& opt) : opt_(opt) {}

    RatFunc eval(Diagram d) {
        RatFunc factor(1);
        simplify(d, factor);
        if (d.crossings.empty()) return factor;

        const Traversal t = traverse(d, opt_.reverse_order);
        std::string key;
        if (opt_.memoize) {
            key = canonical_key(d, opt_.reverse_order
                                       ? traverse(d, false)
                                       : t);
            auto it = memo_.find(key);
            if (it != memo_.end()) return factor * it->second;
        }

        RatFunc val;
        if (t.first_bad < 0) {
            val = RatFunc::alpha(self_writhe(d, t)) * delta().pow(t.components);
        } else {
            const auto ci = static_cast<std::size_t>(t.first_bad);
            const long eps = d.crossings[ci].over_a ? 1 : -1;
            Diagram switched = d;
            switched.crossings[ci].over_a = !switched.crossings[ci].over_a;
            const RatFunc z = s_minus_sinv() * RatFunc(eps);
            val = eval(std::move(switched)) +
                  z * (eval(smoothed(d, ci, true)) - eval(smoothed(d, ci, false)));
            val = val.reduce();
        }
        if (opt_.memoize) memo_.emplace(std::move(key), val);
        return factor * val;
    }

private:
    OracleOptions opt_;
    std::unordered_map<std::string, RatFunc> memo_;
};

}  // namespace

RatFunc kauffman_bruteforce(const Diagram& d, const OracleOptions& opt) {
    d.check();
    if (d.crossings.size() > static_cast<std::size_t>(opt.crossing_limit))
        throw crossing_limit_error(d.crossings.size(), opt.crossing_limit);
    Evaluator ev(opt);
    return ev.eval(d);
}

bool verify_pair(const FractionNotation& f, const OracleOptions& opt) {
    const RatFunc direct = kauffman_bruteforce(build_diagram(f), opt);
    return direct == kauffman_2bridge(f).value;
}

}  // namespace kauffman
