#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ansular/graph.hpp"

namespace ansular {

/// Morphism in the category of disjoint unions of corollas: a witness graph
/// together with identifications of its severed form with the source and of
/// its contracted form with the target.
///
/// Conventions: witness vertex i corresponds to source corolla i; witness
/// component c (numbered by least vertex) corresponds to target corolla
/// comp_target[c]. nu_leg sends each witness half-edge to a leg label of its
/// vertex's source corolla; pi0_leg sends each witness leg label to a leg
/// label of its component's target corolla.
struct GraphMorphism {
    std::vector<Corolla> source;
    std::vector<Corolla> target;
    Graph witness;
    std::map<int, std::string> nu_leg;           // witness half -> source leg label
    std::vector<int> comp_target;                // witness component -> target index
    std::map<std::string, std::string> pi0_leg;  // witness leg label -> target leg label

    void validate() const {
        if (static_cast<int>(source.size()) != witness.vertex_count())
            throw std::invalid_argument("GraphMorphism: one source corolla per witness vertex");
        auto comp = witness.components();
        int nc = witness.component_count();
        if (static_cast<int>(comp_target.size()) != nc ||
            static_cast<int>(target.size()) != nc)
            throw std::invalid_argument("GraphMorphism: one target corolla per component");
        {
            std::set<int> seen(comp_target.begin(), comp_target.end());
            if (static_cast<int>(seen.size()) != nc)
                throw std::invalid_argument("GraphMorphism: comp_target must be a bijection");
        }
        // nu_leg: per vertex, a bijection halves <-> source corolla legs
        for (int v = 0; v < witness.vertex_count(); ++v) {
            std::set<std::string> used;
            std::set<std::string> legs(source[v].legs.begin(), source[v].legs.end());
            for (int h : witness.halves_at(v)) {
                auto it = nu_leg.find(h);
                if (it == nu_leg.end() || !legs.count(it->second) || !used.insert(it->second).second)
                    throw std::invalid_argument("GraphMorphism: nu identification mismatch");
            }
            if (used.size() != legs.size())
                throw std::invalid_argument("GraphMorphism: nu leg counts differ");
        }
        // pi0_leg: per component, a bijection witness legs <-> target legs
        std::vector<std::set<std::string>> got(nc);
        for (int h = 0; h < witness.half_count(); ++h)
            if (witness.is_leg(h)) {
                auto it = pi0_leg.find(witness.leg_label(h));
                if (it == pi0_leg.end())
                    throw std::invalid_argument("GraphMorphism: pi0 identification missing");
                got[comp[witness.attach(h)]].insert(it->second);
            }
        for (int c = 0; c < nc; ++c) {
            const auto& legs = target[comp_target[c]].legs;
            if (got[c] != std::set<std::string>(legs.begin(), legs.end()))
                throw std::invalid_argument("GraphMorphism: pi0 leg counts differ");
        }
    }

    friend bool operator==(const GraphMorphism& a, const GraphMorphism& b) {
        return a.source == b.source && a.target == b.target && a.witness == b.witness &&
               a.nu_leg == b.nu_leg && a.comp_target == b.comp_target && a.pi0_leg == b.pi0_leg;
    }
};

/// Identity morphism: witness is the disjoint union of the corollas
/// themselves, all identifications by equal labels.
inline GraphMorphism identity_morphism(const std::vector<Corolla>& corollas) {
    GraphMorphism m;
    m.source = corollas;
    m.target = corollas;
    for (std::size_t i = 0; i < corollas.size(); ++i) {
        int v = m.witness.add_vertex();
        for (const auto& l : corollas[i].legs) {
            int h = m.witness.add_leg(v, l);
            m.nu_leg[h] = l;
            m.pi0_leg[l] = l;
        }
        m.comp_target.push_back(static_cast<int>(i));
    }
    m.validate();
    return m;
}

/// Composite by graph substitution: the witness of f is substituted into the
/// vertices of the witness of g. Corolla-by-corolla boundary identifications
/// must match (target of f = source of g, equal leg sets per index).
inline GraphMorphism compose(const GraphMorphism& f, const GraphMorphism& g) {
    if (f.target.size() != g.source.size())
        throw std::invalid_argument("compose: boundary corolla counts differ");
    for (std::size_t i = 0; i < f.target.size(); ++i) {
        std::set<std::string> a(f.target[i].legs.begin(), f.target[i].legs.end());
        std::set<std::string> b(g.source[i].legs.begin(), g.source[i].legs.end());
        if (a != b) throw std::invalid_argument("compose: boundary leg sets differ");
    }

    auto f_comp = f.witness.components();

    // witness leg of f by (component, pi0 image label)
    std::map<std::pair<int, std::string>, int> f_leg_by_target;
    for (int h = 0; h < f.witness.half_count(); ++h)
        if (f.witness.is_leg(h)) {
            const std::string& lbl = f.witness.leg_label(h);
            int c = f_comp[f.witness.attach(h)];
            f_leg_by_target[{f.comp_target[c], f.pi0_leg.at(lbl)}] = h;
        }

    // g-witness half-edge -> the corresponding leg half of f's witness:
    // half h at g-vertex v names (via g.nu_leg) a leg of g.source[v], i.e. of
    // f.target[v], whose preimage under f.pi0_leg is a leg of f's witness.
    auto f_leg_of_g_half = [&](int h) {
        int v = g.witness.attach(h);
        return f_leg_by_target.at({v, g.nu_leg.at(h)});
    };

    // Rebuild f's witness with the new pairings; half ids and slots carry over.
    std::vector<std::vector<int>> slots;
    for (int v = 0; v < f.witness.vertex_count(); ++v) slots.push_back(f.witness.halves_at(v));
    std::vector<std::pair<int, int>> edges = f.witness.internal_edges();
    std::map<int, std::string> labels;
    std::map<std::string, std::string> new_pi0;

    std::set<int> consumed;  // f-legs that become internal
    for (auto [h1, h2] : g.witness.internal_edges()) {
        int a = f_leg_of_g_half(h1), b = f_leg_of_g_half(h2);
        edges.emplace_back(std::min(a, b), std::max(a, b));
        consumed.insert(a);
        consumed.insert(b);
    }
    for (int h = 0; h < f.witness.half_count(); ++h) {
        if (!f.witness.is_leg(h) || consumed.count(h)) continue;
        labels[h] = f.witness.leg_label(h);
    }
    // surviving legs correspond to legs of g's witness; compose the pi0 data
    for (int h = 0; h < g.witness.half_count(); ++h) {
        if (!g.witness.is_leg(h)) continue;
        int fl = f_leg_of_g_half(h);
        new_pi0[f.witness.leg_label(fl)] = g.pi0_leg.at(g.witness.leg_label(h));
    }

    GraphMorphism out;
    out.source = f.source;
    out.target = g.target;
    out.witness = Graph::from_parts(std::move(slots), edges, labels);
    out.nu_leg = f.nu_leg;
    out.pi0_leg = std::move(new_pi0);

    // component of the composite -> component of g's witness -> g's target
    auto out_comp = out.witness.components();
    auto g_comp = g.witness.components();
    int nc = out.witness.component_count();
    out.comp_target.assign(nc, -1);
    for (int h = 0; h < g.witness.half_count(); ++h) {
        int fl = f_leg_of_g_half(h);
        int oc = out_comp[out.witness.attach(fl)];
        out.comp_target[oc] = g.comp_target[g_comp[g.witness.attach(h)]];
    }
    // components of g's witness with no half-edges at all (bare corollas with
    // no legs): match them up by f's comp_target
    if (std::find(out.comp_target.begin(), out.comp_target.end(), -1) != out.comp_target.end()) {
        // a component of the composite containing f-vertex w sits inside the
        // g-vertex component of any g-vertex v with f.comp_target[f_comp[w]] = v
        std::vector<int> g_vertex_comp(g.witness.vertex_count());
        for (int v = 0; v < g.witness.vertex_count(); ++v) g_vertex_comp[v] = g_comp[v];
        for (int w = 0; w < out.witness.vertex_count(); ++w) {
            int oc = out_comp[w];
            if (out.comp_target[oc] != -1) continue;
            int gv = f.comp_target[f_comp[w]];  // f-component w lies in g-vertex gv
            out.comp_target[oc] = g.comp_target[g_vertex_comp[gv]];
        }
    }
    out.validate();
    return out;
}

} // namespace ansular
