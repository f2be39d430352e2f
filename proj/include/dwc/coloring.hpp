#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "dwc/group.hpp"
#include "dwc/morse.hpp"
#include "dwc/torus.hpp"

namespace dwc {

struct InternalError : std::logic_error {
    explicit InternalError(const std::string& m) : std::logic_error(m) {}
};
struct CharacterizationFailure : std::logic_error {
    explicit CharacterizationFailure(const std::string& m) : std::logic_error(m) {}
};

using Coloring = std::vector<int>;  // arc id -> group element

struct FramingCoefficient {
    ll p, q;
};

struct PeripheralData {
    int m, l;
    int z = -1;  // set by the surgery filter
};

inline bool coloring_satisfies(const WirtingerPresentation& pres, const FiniteGroup& g,
                               const Coloring& col) {
    for (const auto& r : pres.relations) {
        int conj = g.power(col[r.over], r.sign);
        if (col[r.out] != g.mul(g.mul(g.inv(conj), col[r.in]), conj)) return false;
    }
    return true;
}

/// All arc colorings satisfying the Wirtinger relations, i.e. representations
/// pi_1 of the exterior -> Gamma. Backtracking assigns the lowest unknown arc
/// and propagates each relation in both directions, so free choices are one
/// per bridge. Output order is deterministic (lexicographic).
inline std::vector<Coloring> enumerate_colorings(const WirtingerPresentation& pres,
                                                 const FiniteGroup& g) {
    std::vector<Coloring> out;
    Coloring col(pres.n_generators, -1);

    auto propagate = [&](std::vector<int>& trail) -> bool {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& r : pres.relations) {
                if (col[r.over] < 0) continue;
                int conj = g.power(col[r.over], r.sign);
                if (col[r.in] >= 0) {
                    int want = g.mul(g.mul(g.inv(conj), col[r.in]), conj);
                    if (col[r.out] < 0) {
                        col[r.out] = want;
                        trail.push_back(r.out);
                        changed = true;
                    } else if (col[r.out] != want) {
                        return false;
                    }
                } else if (col[r.out] >= 0) {
                    col[r.in] = g.mul(g.mul(conj, col[r.out]), g.inv(conj));
                    trail.push_back(r.in);
                    changed = true;
                }
            }
        }
        return true;
    };

    auto search = [&](auto&& self) -> void {
        int free_arc = -1;
        for (int a = 0; a < pres.n_generators; ++a)
            if (col[a] < 0) {
                free_arc = a;
                break;
            }
        if (free_arc < 0) {
            out.push_back(col);
            return;
        }
        for (int x = 0; x < g.order(); ++x) {
            col[free_arc] = x;
            std::vector<int> trail;
            if (propagate(trail)) self(self);
            for (int a : trail) col[a] = -1;
            col[free_arc] = -1;
        }
    };
    search(search);
    return out;
}

inline int evaluate_word(const FiniteGroup& g, const Coloring& col,
                         const std::vector<std::pair<int, int>>& word) {
    int v = g.identity();
    for (auto [arc, e] : word) v = g.mul(v, g.power(col[arc], e));
    return v;
}

inline PeripheralData peripheral_images(const WirtingerPresentation& pres, const FiniteGroup& g,
                                        const Coloring& col, int component) {
    PeripheralData d;
    d.m = col[pres.meridian[component]];
    d.l = evaluate_word(g, col, longitude_word(pres, component));
    if (g.mul(d.m, d.l) != g.mul(d.l, d.m))
        throw InternalError("meridian and longitude images do not commute");
    return d;
}

struct SurgeryRep {
    Coloring coloring;
    std::vector<PeripheralData> peripheral;  // per component, with z set
};

/// Keeps colorings extending over the surgery solid tori: m^p l^q = 1 on
/// every component. The distinguished element is z = m^p' l^q' from the
/// framing completion; z^p = l and z^-q = m are rechecked and a violation
/// aborts, since the whole calculus hangs on that characterization.
inline std::vector<SurgeryRep> surgery_filter(const WirtingerPresentation& pres,
                                              const FiniteGroup& g,
                                              const std::vector<Coloring>& colorings,
                                              const std::vector<FramingCoefficient>& coeffs) {
    if (static_cast<int>(coeffs.size()) != pres.n_components)
        throw TopologyError("one surgery coefficient per component required");
    std::vector<SlTwoMatrix> fr;
    for (const auto& c : coeffs) fr.push_back(complete_framing(c.p, c.q));
    std::vector<SurgeryRep> out;
    for (const auto& col : colorings) {
        SurgeryRep rep{col, {}};
        bool ok = true;
        for (int c = 0; c < pres.n_components && ok; ++c) {
            PeripheralData d = peripheral_images(pres, g, col, c);
            if (g.mul(g.power(d.m, coeffs[c].p), g.power(d.l, coeffs[c].q)) != g.identity()) {
                ok = false;
                break;
            }
            d.z = g.mul(g.power(d.m, fr[c].b), g.power(d.l, fr[c].d));
            if (g.power(d.z, coeffs[c].p) != d.l || g.power(d.z, -coeffs[c].q) != d.m)
                throw CharacterizationFailure("z^p = l, z^-q = m failed");
            rep.peripheral.push_back(d);
        }
        if (ok) out.push_back(std::move(rep));
    }
    return out;
}

struct WeightedColoring {
    Coloring coloring;  // lex-least in its conjugation orbit
    ll weight;          // orbit size
};

inline std::vector<WeightedColoring> dedup_by_conjugation(const FiniteGroup& g,
                                                          const std::vector<Coloring>& colorings) {
    std::set<Coloring> all(colorings.begin(), colorings.end());
    std::vector<WeightedColoring> out;
    std::set<Coloring> seen;
    for (const auto& col : all) {
        if (seen.count(col)) continue;
        std::set<Coloring> orbit;
        for (int x = 0; x < g.order(); ++x) {
            Coloring conj(col.size());
            for (size_t a = 0; a < col.size(); ++a)
                conj[a] = g.mul(g.mul(g.inv(x), col[a]), x);
            orbit.insert(std::move(conj));
        }
        for (const auto& o : orbit) seen.insert(o);
        out.push_back({*orbit.begin(), static_cast<ll>(orbit.size())});
    }
    return out;
}

}  // namespace dwc
