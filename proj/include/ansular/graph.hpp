#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace ansular {

/// One-vertex graph with a list of distinctly labeled legs.
/// The corolla with n+1 legs plays the role of T_n; zero legs is allowed.
struct Corolla {
    std::vector<std::string> legs;

    friend bool operator==(const Corolla& a, const Corolla& b) { return a.legs == b.legs; }
    friend bool operator<(const Corolla& a, const Corolla& b) { return a.legs < b.legs; }
};

inline Corolla corolla_with_legs(std::vector<std::string> legs) {
    std::set<std::string> seen(legs.begin(), legs.end());
    if (seen.size() != legs.size())
        throw std::invalid_argument("corolla legs must be pairwise distinct");
    return Corolla{std::move(legs)};
}

/// Half-edge graph: vertices carry ordered slots of half-edges, a fixed-point
/// free partial involution pairs half-edges into internal edges, and unpaired
/// half-edges are legs carrying an external label. Values are immutable after
/// construction; all operations return new graphs.
class Graph {
public:
    Graph() = default;

    int add_vertex() {
        slots_.emplace_back();
        return static_cast<int>(slots_.size()) - 1;
    }

    /// Attach a labeled leg to vertex v; returns the half-edge id.
    int add_leg(int v, const std::string& label) {
        check_vertex(v);
        if (label.empty()) throw std::invalid_argument("leg label must be nonempty");
        for (const auto& l : leg_label_)
            if (l == label) throw std::invalid_argument("duplicate leg label: " + label);
        int h = new_half(v, label);
        return h;
    }

    /// Internal edge between u and v (u == v gives a self-loop).
    std::pair<int, int> add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        int h1 = new_half(u, "");
        int h2 = new_half(v, "");
        partner_[h1] = h2;
        partner_[h2] = h1;
        return {h1, h2};
    }

    int vertex_count() const { return static_cast<int>(slots_.size()); }
    int half_count() const { return static_cast<int>(attach_.size()); }

    int attach(int h) const { return attach_.at(h); }
    int partner(int h) const { return partner_.at(h); }  // -1 for legs
    bool is_leg(int h) const { return partner_.at(h) < 0; }
    const std::string& leg_label(int h) const { return leg_label_.at(h); }
    const std::vector<int>& halves_at(int v) const { return slots_.at(v); }

    /// Total valence of a vertex (legs and internal half-edges alike).
    int valence(int v) const { return static_cast<int>(slots_.at(v).size()); }

    /// Internal edges as pairs (h, partner(h)) with h < partner(h), sorted.
    std::vector<std::pair<int, int>> internal_edges() const {
        std::vector<std::pair<int, int>> out;
        for (int h = 0; h < half_count(); ++h)
            if (partner_[h] > h) out.emplace_back(h, partner_[h]);
        return out;
    }

    /// Leg labels in sorted order.
    std::vector<std::string> leg_labels() const {
        std::vector<std::string> out;
        for (int h = 0; h < half_count(); ++h)
            if (is_leg(h)) out.push_back(leg_label_[h]);
        std::sort(out.begin(), out.end());
        return out;
    }

    int leg_by_label(const std::string& label) const {
        for (int h = 0; h < half_count(); ++h)
            if (is_leg(h) && leg_label_[h] == label) return h;
        throw std::invalid_argument("no leg labeled " + label);
    }

    /// Component index of each vertex (components numbered by least vertex).
    std::vector<int> components() const {
        std::vector<int> parent(slots_.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (int h = 0; h < half_count(); ++h)
            if (partner_[h] >= 0) {
                int a = find(attach_[h]), b = find(attach_[partner_[h]]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        std::map<int, int> index;
        std::vector<int> comp(slots_.size());
        for (int v = 0; v < vertex_count(); ++v) {
            int r = find(v);
            auto it = index.find(r);
            if (it == index.end()) it = index.emplace(r, static_cast<int>(index.size())).first;
            comp[v] = it->second;
        }
        return comp;
    }

    int component_count() const {
        auto c = components();
        return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
    }

    bool is_connected() const { return vertex_count() <= 1 || component_count() == 1; }

    /// First Betti number: |internal edges| - |vertices| + |components|.
    int betti() const {
        return static_cast<int>(internal_edges().size()) - vertex_count() + component_count();
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.slots_ == b.slots_ && a.attach_ == b.attach_ && a.partner_ == b.partner_ &&
               a.leg_label_ == b.leg_label_;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

    /// Construct from explicit structure. `slots` lists half-edge ids per
    /// vertex (ids must be exactly 0..H-1, each appearing once), `edges`
    /// pairs them, `labels` names the rest.
    static Graph from_parts(std::vector<std::vector<int>> slots,
                            const std::vector<std::pair<int, int>>& edges,
                            const std::map<int, std::string>& labels) {
        Graph g;
        g.slots_ = std::move(slots);
        int h_count = 0;
        for (const auto& sl : g.slots_) h_count += static_cast<int>(sl.size());
        g.attach_.assign(h_count, -1);
        g.partner_.assign(h_count, -1);
        g.leg_label_.assign(h_count, "");
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int h : g.slots_[v]) {
                if (h < 0 || h >= h_count || g.attach_[h] != -1)
                    throw std::invalid_argument("from_parts: bad half-edge ids");
                g.attach_[h] = v;
            }
        for (auto [a, b] : edges) {
            if (a == b || g.partner_.at(a) != -1 || g.partner_.at(b) != -1)
                throw std::invalid_argument("from_parts: bad pairing");
            g.partner_[a] = b;
            g.partner_[b] = a;
        }
        for (const auto& [h, label] : labels) {
            if (g.partner_.at(h) != -1 || label.empty())
                throw std::invalid_argument("from_parts: bad leg");
            g.leg_label_[h] = label;
        }
        for (int h = 0; h < h_count; ++h)
            if (g.partner_[h] == -1 && g.leg_label_[h].empty())
                throw std::invalid_argument("from_parts: half-edge neither paired nor a leg");
        std::set<std::string> seen;
        for (const auto& l : g.leg_label_)
            if (!l.empty() && !seen.insert(l).second)
                throw std::invalid_argument("from_parts: duplicate leg label");
        return g;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["vertices"] = slots_;
        nlohmann::json edges = nlohmann::json::array();
        for (auto [h, hp] : internal_edges()) edges.push_back({h, hp});
        j["edges"] = std::move(edges);
        nlohmann::json legs = nlohmann::json::object();
        for (int h = 0; h < half_count(); ++h)
            if (is_leg(h)) {
                int v = attach_[h];
                int slot = -1;
                for (std::size_t s = 0; s < slots_[v].size(); ++s)
                    if (slots_[v][s] == h) slot = static_cast<int>(s);
                legs[leg_label_[h]] = {v, slot};
            }
        j["legs"] = std::move(legs);
        return j;
    }

    static Graph from_json(const nlohmann::json& j) {
        Graph g;
        g.slots_ = j.at("vertices").get<std::vector<std::vector<int>>>();
        int h_max = -1;
        for (const auto& sl : g.slots_)
            for (int h : sl) h_max = std::max(h_max, h);
        g.attach_.assign(h_max + 1, -1);
        g.partner_.assign(h_max + 1, -1);
        g.leg_label_.assign(h_max + 1, "");
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int h : g.slots_[v]) {
                if (h < 0 || g.attach_[h] != -1)
                    throw std::invalid_argument("graph json: half-edge attached twice");
                g.attach_[h] = v;
            }
        for (int h = 0; h <= h_max; ++h)
            if (g.attach_[h] == -1)
                throw std::invalid_argument("graph json: unattached half-edge id");
        for (const auto& e : j.at("edges")) {
            int h1 = e.at(0).get<int>(), h2 = e.at(1).get<int>();
            if (h1 == h2) throw std::invalid_argument("graph json: pairing has a fixed point");
            if (g.partner_.at(h1) != -1 || g.partner_.at(h2) != -1)
                throw std::invalid_argument("graph json: half-edge paired twice");
            g.partner_[h1] = h2;
            g.partner_[h2] = h1;
        }
        for (const auto& [label, pos] : j.at("legs").items()) {
            int v = pos.at(0).get<int>(), slot = pos.at(1).get<int>();
            if (v < 0 || v >= g.vertex_count() || slot < 0 ||
                slot >= static_cast<int>(g.slots_[v].size()))
                throw std::invalid_argument("graph json: bad leg position");
            int h = g.slots_[v][slot];
            if (g.partner_[h] != -1 || !g.leg_label_[h].empty())
                throw std::invalid_argument("graph json: leg collides with edge or leg");
            g.leg_label_[h] = label;
        }
        for (int h = 0; h <= h_max; ++h)
            if (g.partner_[h] == -1 && g.leg_label_[h].empty())
                throw std::invalid_argument("graph json: half-edge neither paired nor a leg");
        return g;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count()) throw std::invalid_argument("no such vertex");
    }

    int new_half(int v, const std::string& label) {
        int h = half_count();
        attach_.push_back(v);
        partner_.push_back(-1);
        leg_label_.push_back(label);
        slots_[v].push_back(h);
        return h;
    }

    std::vector<std::vector<int>> slots_;  // per-vertex half-edge ids, slot order
    std::vector<int> attach_;              // half -> vertex
    std::vector<int> partner_;             // half -> half, -1 for legs
    std::vector<std::string> leg_label_;   // half -> label, "" for internal
};

/// Build a corolla graph: one vertex carrying the given legs in order.
inline Graph corolla_graph(const Corolla& c) {
    Graph g;
    int v = g.add_vertex();
    for (const auto& l : c.legs) g.add_leg(v, l);
    return g;
}

/// Circle with n+1 bivalent vertices 0..n, edges i -> i+1 mod n+1.
/// For n = 0 this is the one-vertex graph with a self-loop.
inline Graph circle_graph(int n) {
    if (n < 0) throw std::invalid_argument("circle_graph: n >= 0 required");
    Graph g;
    for (int i = 0; i <= n; ++i) g.add_vertex();
    for (int i = 0; i <= n; ++i) g.add_edge(i, (i + 1) % (n + 1));
    return g;
}

/// Sever every internal edge: same vertices, every half-edge becomes a leg.
/// Cut legs are labeled deterministically from the half-edge id.
inline Graph nu(const Graph& g) {
    Graph out;
    for (int v = 0; v < g.vertex_count(); ++v) out.add_vertex();
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int h : g.halves_at(v)) {
            if (g.is_leg(h))
                out.add_leg(v, g.leg_label(h));
            else
                out.add_leg(v, "cut" + std::to_string(h));
        }
    return out;
}

/// Contract all internal edges: one corolla per connected component, carrying
/// that component's legs with labels preserved.
inline Graph pi0(const Graph& g) {
    auto comp = g.components();
    int nc = g.component_count();
    Graph out;
    for (int c = 0; c < nc; ++c) out.add_vertex();
    // legs in original half-edge order keeps the result deterministic
    for (int h = 0; h < g.half_count(); ++h)
        if (g.is_leg(h)) out.add_leg(comp[g.attach(h)], g.leg_label(h));
    return out;
}

/// Contract one internal, non-loop edge given by one of its half-edges.
/// The endpoint of h absorbs the other endpoint; Betti number and leg
/// labels are unchanged.
inline Graph contract_edge(const Graph& g, int h) {
    if (h < 0 || h >= g.half_count() || g.is_leg(h))
        throw std::invalid_argument("contract_edge: not an internal edge");
    int hp = g.partner(h);
    int u = g.attach(h), v = g.attach(hp);
    if (u == v) throw std::invalid_argument("contract_edge: refusing to contract a self-loop");

    // vertex renumbering: v merges into u, vertices above v shift down
    auto new_vertex = [&](int w) { return w == v ? (u < v ? u : u - 1) : (w < v ? w : w - 1); };

    // merged vertex keeps u's remaining slots followed by v's remaining slots
    std::vector<std::vector<int>> old_slot_plan(g.vertex_count() - 1);
    for (int w = 0; w < g.vertex_count(); ++w) {
        if (w == v) continue;
        for (int x : g.halves_at(w))
            if (x != h) old_slot_plan[new_vertex(w)].push_back(x);
        if (w == u)
            for (int x : g.halves_at(v))
                if (x != hp) old_slot_plan[new_vertex(u)].push_back(x);
    }

    // fresh half ids in (vertex, slot) order
    std::vector<int> half_map(g.half_count(), -1);
    std::vector<std::vector<int>> slots(old_slot_plan.size());
    int next = 0;
    for (std::size_t w = 0; w < old_slot_plan.size(); ++w)
        for (int x : old_slot_plan[w]) {
            half_map[x] = next++;
            slots[w].push_back(half_map[x]);
        }

    std::vector<std::pair<int, int>> edges;
    std::map<int, std::string> labels;
    for (int x = 0; x < g.half_count(); ++x) {
        if (half_map[x] < 0) continue;
        if (g.is_leg(x))
            labels[half_map[x]] = g.leg_label(x);
        else if (x < g.partner(x))
            edges.emplace_back(half_map[x], half_map[g.partner(x)]);
    }
    return Graph::from_parts(std::move(slots), edges, labels);
}

/// Result of collapsing all valence-one vertices reachable by edge
/// contraction. `one_leg_exception` marks the case where the result is the
/// one-leg corolla, which is kept as-is.
struct CollapseResult {
    Graph graph;
    std::vector<std::pair<int, int>> collapsed_edges;  // edges of successive graphs
    bool one_leg_exception = false;
};

/// Collapse pendant (valence-one) vertices of a connected graph until none
/// remain. The one-leg corolla is returned unchanged and flagged. Idempotent.
inline CollapseResult collapse_reduced(const Graph& g) {
    if (!g.is_connected())
        throw std::invalid_argument("collapse_reduced: graph must be connected");
    CollapseResult res{g, {}, false};
    for (;;) {
        const Graph& cur = res.graph;
        if (cur.vertex_count() == 1 && cur.valence(0) == 1 && cur.is_leg(cur.halves_at(0)[0])) {
            res.one_leg_exception = true;
            return res;
        }
        int pick = -1;
        for (int v = 0; v < cur.vertex_count() && pick < 0; ++v)
            if (cur.valence(v) == 1 && !cur.is_leg(cur.halves_at(v)[0])) pick = cur.halves_at(v)[0];
        if (pick < 0) return res;
        // contract from the surviving endpoint so the pendant vertex vanishes
        res.collapsed_edges.emplace_back(cur.partner(pick), pick);
        res.graph = contract_edge(cur, cur.partner(pick));
    }
}

} // namespace ansular
