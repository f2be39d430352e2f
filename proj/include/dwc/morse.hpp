#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dwc {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};
struct TopologyError : std::runtime_error {
    explicit TopologyError(const std::string& m) : std::runtime_error(m) {}
};

enum class EventKind { Cup, Cap, CrossPos, CrossNeg };

struct Event {
    EventKind kind;
    bool ccw;  // cups only
    int pos;
};

struct CrossingInfo {
    int over_arc;
    int under_in;   // arc entering the crossing along the under strand
    int under_out;  // arc leaving it
    int sign;       // right-hand rule
};

/// One strand puncturing a horizontal interface.
struct StrandInfo {
    bool down;  // directed with the sweep
    int arc;
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    int add() {
        parent.push_back(static_cast<int>(parent.size()));
        return parent.back();
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        // keep the smaller id as root so canonical order follows creation order
        if (a < b) parent[b] = a;
        else parent[a] = b;
    }
};

}  // namespace detail

/// Layered diagram: events read top to bottom, each acting on strand
/// positions pos, pos+1. Construction sweeps once, labelling arcs (maximal
/// segments between undercrossings) and components, and computing crossing
/// signs from the strand orientations.
class MorseDiagram {
public:
    explicit MorseDiagram(std::vector<Event> events) : events_(std::move(events)) { sweep(); }

    const std::vector<Event>& events() const { return events_; }
    int component_count() const { return n_components_; }
    int arc_count() const { return n_arcs_; }
    /// component of each arc, indexed by canonical arc id
    const std::vector<int>& arc_component() const { return arc_component_; }
    const std::vector<CrossingInfo>& crossings() const { return crossings_; }
    /// interfaces()[k] is the strand sequence just above row k; the last
    /// entry is the (empty) state below the final row
    const std::vector<std::vector<StrandInfo>>& interfaces() const { return interfaces_; }

    int component_of(int arc) const { return arc_component_[arc]; }

    long long writhe(int component) const {
        long long w = 0;
        for (const auto& c : crossings_)
            if (arc_component_[c.over_arc] == component && arc_component_[c.under_in] == component)
                w += c.sign;
        return w;
    }

    long long total_signed_crossings() const {
        long long s = 0;
        for (const auto& c : crossings_) s += c.sign;
        return s;
    }

    long long linking_number(int ci, int cj) const {
        long long s = 0;
        for (const auto& c : crossings_) {
            int co = arc_component_[c.over_arc], cu = arc_component_[c.under_in];
            if ((co == ci && cu == cj) || (co == cj && cu == ci)) s += c.sign;
        }
        return s / 2;  // each inter-component crossing counted once, pairs sum evenly
    }

private:
    struct Strand {
        bool down;  // directed with the sweep
        int arc, comp;
    };

    void sweep() {
        detail::UnionFind arcs, comps;
        std::vector<Strand> slots;
        struct RawCrossing {
            int over_arc, under_in, under_out, sign;
        };
        std::vector<RawCrossing> raw;
        std::vector<int> arc_comp_raw;  // component at each raw arc's creation
        int cups = 0, caps = 0;

        std::vector<std::vector<std::pair<bool, int>>> snapshots;  // (down, raw arc)
        auto snapshot = [&]() {
            std::vector<std::pair<bool, int>> s;
            for (const auto& st : slots) s.emplace_back(st.down, st.arc);
            snapshots.push_back(std::move(s));
        };
        for (size_t row = 0; row < events_.size(); ++row) {
            snapshot();
            const Event& e = events_[row];
            int w = static_cast<int>(slots.size());
            auto fail = [&](const std::string& what) {
                throw TopologyError("row " + std::to_string(row + 1) + ": " + what);
            };
            if (e.pos < 0) fail("negative position");
            switch (e.kind) {
                case EventKind::Cup: {
                    if (e.pos > w) fail("cup position beyond width " + std::to_string(w));
                    int a = arcs.add();
                    int c = comps.add();
                    arc_comp_raw.push_back(c);
                    // a counterclockwise circle runs down its left side
                    Strand left{e.ccw, a, c}, right{!e.ccw, a, c};
                    slots.insert(slots.begin() + e.pos, {left, right});
                    ++cups;
                    break;
                }
                case EventKind::Cap: {
                    if (e.pos + 1 >= w) fail("cap position beyond width " + std::to_string(w));
                    Strand l = slots[e.pos], r = slots[e.pos + 1];
                    if (l.down == r.down) fail("cap joining parallel strands");
                    arcs.unite(l.arc, r.arc);
                    comps.unite(l.comp, r.comp);
                    slots.erase(slots.begin() + e.pos, slots.begin() + e.pos + 2);
                    ++caps;
                    break;
                }
                case EventKind::CrossPos:
                case EventKind::CrossNeg: {
                    if (e.pos + 1 >= w) fail("crossing position beyond width " + std::to_string(w));
                    bool pos_kind = e.kind == EventKind::CrossPos;
                    // x+ : over strand enters at pos+1, leaves at pos; x- mirrored
                    Strand over = pos_kind ? slots[e.pos + 1] : slots[e.pos];
                    Strand under = pos_kind ? slots[e.pos] : slots[e.pos + 1];
                    // direction vectors with y up, sweep moving down
                    int dx = pos_kind ? -1 : 1;  // over: top pos+1 -> bottom pos, or mirrored
                    int ox = over.down ? dx : -dx, oy = over.down ? -1 : 1;
                    int ux = under.down ? -dx : dx, uy = under.down ? -1 : 1;
                    int sign = (ox * uy - oy * ux) > 0 ? 1 : -1;
                    int b = arcs.add();
                    arc_comp_raw.push_back(under.comp);
                    int in = under.down ? under.arc : b;
                    int out = under.down ? b : under.arc;
                    raw.push_back({over.arc, in, out, sign});
                    Strand under2{under.down, b, under.comp};
                    slots[e.pos] = pos_kind ? over : under2;
                    slots[e.pos + 1] = pos_kind ? under2 : over;
                    break;
                }
            }
        }
        snapshot();
        if (!slots.empty())
            throw TopologyError(std::to_string(slots.size()) + " strand(s) left unclosed");
        if (cups != caps) throw TopologyError("cup/cap count mismatch");

        // renumber canonical arc and component roots in creation order
        std::map<int, int> arc_id, comp_id;
        for (int a = 0; a < static_cast<int>(arcs.parent.size()); ++a) {
            int r = arcs.find(a);
            if (!arc_id.count(r)) arc_id[r] = static_cast<int>(arc_id.size());
        }
        for (int c = 0; c < static_cast<int>(comps.parent.size()); ++c) {
            int r = comps.find(c);
            if (!comp_id.count(r)) comp_id[r] = static_cast<int>(comp_id.size());
        }
        n_arcs_ = static_cast<int>(arc_id.size());
        n_components_ = static_cast<int>(comp_id.size());
        arc_component_.assign(n_arcs_, -1);
        for (int a = 0; a < static_cast<int>(arcs.parent.size()); ++a) {
            int ca = arc_id[arcs.find(a)];
            int cc = comp_id[comps.find(arc_comp_raw[a])];
            if (arc_component_[ca] != -1 && arc_component_[ca] != cc)
                throw TopologyError("inconsistent arc/component bookkeeping");
            arc_component_[ca] = cc;
        }
        crossings_.clear();
        for (const auto& r : raw)
            crossings_.push_back({arc_id[arcs.find(r.over_arc)], arc_id[arcs.find(r.under_in)],
                                  arc_id[arcs.find(r.under_out)], r.sign});
        interfaces_.clear();
        for (const auto& s : snapshots) {
            std::vector<StrandInfo> iface;
            for (const auto& [down, arc] : s) iface.push_back({down, arc_id[arcs.find(arc)]});
            interfaces_.push_back(std::move(iface));
        }
    }

    std::vector<Event> events_;
    int n_components_ = 0, n_arcs_ = 0;
    std::vector<int> arc_component_;
    std::vector<CrossingInfo> crossings_;
    std::vector<std::vector<StrandInfo>> interfaces_;
};

inline MorseDiagram parse_diagram(const std::string& text) {
    std::vector<Event> events;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        auto need_pos = [&]() {
            long long p;
            if (!(ls >> p) || p < 0)
                throw ParseError("line " + std::to_string(lineno) + ": expected position");
            std::string extra;
            if (ls >> extra) throw ParseError("line " + std::to_string(lineno) + ": trailing token");
            return static_cast<int>(p);
        };
        if (tok == "cup") {
            std::string ori;
            if (!(ls >> ori) || (ori != "ccw" && ori != "cw"))
                throw ParseError("line " + std::to_string(lineno) + ": cup needs ccw|cw");
            int p = need_pos();
            events.push_back({EventKind::Cup, ori == "ccw", p});
        } else if (tok == "cap") {
            events.push_back({EventKind::Cap, false, need_pos()});
        } else if (tok == "x+") {
            events.push_back({EventKind::CrossPos, false, need_pos()});
        } else if (tok == "x-") {
            events.push_back({EventKind::CrossNeg, false, need_pos()});
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown event '" + tok + "'");
        }
    }
    return MorseDiagram(std::move(events));
}

struct WirtingerRelation {
    int out, over, in;
    int sign;  // out = over^(-sign) . in . over^(sign)
};

struct WirtingerPresentation {
    int n_generators = 0;
    int n_components = 0;
    std::vector<WirtingerRelation> relations;
    std::vector<int> arc_component;  // per generator
    std::vector<int> meridian;       // per component: its basepoint generator
    std::vector<long long> writhe;   // per component
};

inline WirtingerPresentation wirtinger(const MorseDiagram& d,
                                       const std::vector<int>* basepoints = nullptr) {
    WirtingerPresentation p;
    p.n_generators = d.arc_count();
    p.n_components = d.component_count();
    p.arc_component = d.arc_component();
    for (const auto& c : d.crossings()) p.relations.push_back({c.under_out, c.over_arc, c.under_in, c.sign});
    p.meridian.assign(p.n_components, -1);
    if (basepoints) {
        if (static_cast<int>(basepoints->size()) != p.n_components)
            throw TopologyError("basepoint list size mismatch");
        for (int c = 0; c < p.n_components; ++c) {
            int a = (*basepoints)[c];
            if (a < 0 || a >= p.n_generators || p.arc_component[a] != c)
                throw TopologyError("basepoint arc not on its component");
            p.meridian[c] = a;
        }
    } else {
        // default: first-created arc of each component
        for (int a = 0; a < p.n_generators; ++a)
            if (p.meridian[p.arc_component[a]] == -1) p.meridian[p.arc_component[a]] = a;
    }
    p.writhe.resize(p.n_components);
    for (int c = 0; c < p.n_components; ++c) p.writhe[c] = d.writhe(c);
    return p;
}

/// 0-framed longitude of a component as a word in the generators: the signed
/// over-arcs met travelling from the basepoint, times meridian^(-writhe).
/// Entries are (generator, +-1).
inline std::vector<std::pair<int, int>> longitude_word(const WirtingerPresentation& p,
                                                       int component) {
    std::map<int, const WirtingerRelation*> by_in;
    for (const auto& r : p.relations)
        if (p.arc_component[r.in] == component) {
            if (by_in.count(r.in)) throw TopologyError("arc enters two crossings");
            by_in[r.in] = &r;
        }
    std::vector<std::pair<int, int>> word;
    int m = p.meridian[component];
    int cur = m;
    size_t guard = 0;
    while (true) {
        auto it = by_in.find(cur);
        if (it == by_in.end()) break;  // component never goes under
        word.emplace_back(it->second->over, it->second->sign);
        cur = it->second->out;
        if (cur == m) break;
        if (++guard > p.relations.size()) throw TopologyError("longitude traversal does not close");
    }
    long long w = p.writhe[component];
    for (long long i = 0; i < (w < 0 ? -w : w); ++i) word.emplace_back(m, w > 0 ? -1 : 1);
    return word;
}

}  // namespace dwc
