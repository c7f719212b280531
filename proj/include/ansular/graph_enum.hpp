#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "ansular/graph.hpp"

namespace ansular {

/// Isomorphism-invariant data of a graph at the multigraph level:
/// vertex count, edge multiplicities per unordered vertex pair (loops on the
/// diagonal) and the vertex carrying each leg label. Half-edge slot order is
/// a convenience encoding and deliberately ignored.
struct GraphShape {
    int vertices = 0;
    std::map<std::pair<int, int>, int> mult;  // (i <= j) -> multiplicity
    std::map<std::string, int> legs;          // label -> vertex

    friend bool operator==(const GraphShape& a, const GraphShape& b) {
        return a.vertices == b.vertices && a.mult == b.mult && a.legs == b.legs;
    }
    friend bool operator<(const GraphShape& a, const GraphShape& b) {
        if (a.vertices != b.vertices) return a.vertices < b.vertices;
        if (a.mult != b.mult) return a.mult < b.mult;
        return a.legs < b.legs;
    }
};

inline GraphShape shape_of(const Graph& g) {
    GraphShape s;
    s.vertices = g.vertex_count();
    for (auto [h, hp] : g.internal_edges()) {
        int i = g.attach(h), j = g.attach(hp);
        if (i > j) std::swap(i, j);
        ++s.mult[{i, j}];
    }
    for (int h = 0; h < g.half_count(); ++h)
        if (g.is_leg(h)) s.legs[g.leg_label(h)] = g.attach(h);
    return s;
}

inline GraphShape permuted(const GraphShape& s, const std::vector<int>& perm) {
    GraphShape out;
    out.vertices = s.vertices;
    for (const auto& [pr, m] : s.mult) {
        int i = perm[pr.first], j = perm[pr.second];
        if (i > j) std::swap(i, j);
        out.mult[{i, j}] += m;
    }
    for (const auto& [l, v] : s.legs) out.legs[l] = perm[v];
    return out;
}

/// Minimal shape over all vertex orderings; legs are pinned by their labels.
/// Brute force over permutations, adequate at the scales used here.
inline GraphShape canonical_shape(const GraphShape& s) {
    std::vector<int> perm(s.vertices);
    std::iota(perm.begin(), perm.end(), 0);
    GraphShape best = s;
    bool first = true;
    do {
        GraphShape cand = permuted(s, perm);
        if (first || cand < best) { best = cand; first = false; }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    return canonical_shape(shape_of(a)) == canonical_shape(shape_of(b));
}

/// Number of half-edge-level automorphisms fixing every leg label: vertex
/// permutations preserving the shape, times k! per parallel-edge bundle,
/// times k! 2^k per loop bundle (loops may also flip their two halves).
inline std::uint64_t automorphism_count(const Graph& g) {
    GraphShape s = shape_of(g);
    std::vector<int> perm(s.vertices);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t vertex_perms = 0;
    do {
        if (permuted(s, perm) == s) ++vertex_perms;
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::uint64_t factor = 1;
    auto fact = [](int k) {
        std::uint64_t f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    for (const auto& [pr, m] : s.mult) {
        factor *= fact(m);
        if (pr.first == pr.second) factor <<= m;  // loop half-flips
    }
    return vertex_perms * factor;
}

/// Materialize a shape as a Graph with deterministic half-edge layout:
/// per vertex, legs first (sorted by label), then edge ends ordered by the
/// sorted bundle list.
inline Graph graph_from_shape(const GraphShape& s) {
    std::vector<std::vector<std::string>> legs_at(s.vertices);
    for (const auto& [l, v] : s.legs) legs_at[v].push_back(l);  // map order = sorted

    std::vector<std::pair<std::pair<int, int>, int>> bundles(s.mult.begin(), s.mult.end());

    std::vector<std::vector<int>> slots(s.vertices);
    std::map<int, std::string> labels;
    std::vector<std::pair<int, int>> edges;

    // first pass: count halves per vertex to assign ids in (vertex, slot) order
    std::vector<int> half_at_vertex(s.vertices, 0);
    for (int v = 0; v < s.vertices; ++v) half_at_vertex[v] += static_cast<int>(legs_at[v].size());
    for (const auto& [pr, m] : bundles) {
        half_at_vertex[pr.first] += m;
        half_at_vertex[pr.second] += m;  // loops get both halves at the same vertex
    }
    std::vector<int> base(s.vertices, 0);
    int acc = 0;
    for (int v = 0; v < s.vertices; ++v) { base[v] = acc; acc += half_at_vertex[v]; }

    std::vector<int> cursor = base;
    auto take = [&](int v) { int h = cursor[v]++; slots[v].push_back(h); return h; };

    for (int v = 0; v < s.vertices; ++v)
        for (const auto& l : legs_at[v]) labels[take(v)] = l;
    for (const auto& [pr, m] : bundles)
        for (int k = 0; k < m; ++k) {
            int h1 = take(pr.first);
            int h2 = take(pr.second);
            edges.emplace_back(h1, h2);
        }
    // slots currently hold ids only partially in per-vertex order when a
    // bundle touches two vertices; re-sort each vertex's slot list
    for (auto& sl : slots) std::sort(sl.begin(), sl.end());
    return Graph::from_parts(std::move(slots), edges, labels);
}

/// Connected graph with legs identified with a target corolla, together with
/// its genus (first Betti number).
struct EnvelopeObject {
    Graph graph;
    int genus = 0;
};

/// Complete duplicate-free list of connected reduced graphs (no valence-one
/// vertices, with the one-leg corolla exception) with the given leg labels,
/// first Betti number `genus` and at most `max_vertices` vertices, in the
/// deterministic order of their canonical shapes.
inline std::vector<EnvelopeObject> enumerate_reduced(const std::vector<std::string>& leg_labels,
                                                     int genus, int max_vertices) {
    if (max_vertices < 1) throw std::invalid_argument("enumerate_reduced: max_vertices >= 1");
    if (genus < 0) throw std::invalid_argument("enumerate_reduced: genus >= 0");
    std::set<GraphShape> found;
    const int nl = static_cast<int>(leg_labels.size());

    for (int v = 1; v <= max_vertices; ++v) {
        int e = genus + v - 1;
        // all unordered vertex pairs including loops
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < v; ++i)
            for (int j = i; j < v; ++j) pairs.emplace_back(i, j);

        // leg assignments: function labels -> vertices
        std::vector<std::vector<int>> leg_assignments;
        {
            std::vector<int> cur(nl, 0);
            for (;;) {
                leg_assignments.push_back(cur);
                int i = nl - 1;
                while (i >= 0 && cur[i] == v - 1) cur[i--] = 0;
                if (i < 0) break;
                ++cur[i];
            }
        }

        // multisets of e edges over `pairs`
        std::function<void(std::size_t, int, std::map<std::pair<int, int>, int>&)> rec =
            [&](std::size_t idx, int remaining, std::map<std::pair<int, int>, int>& mult) {
                if (remaining == 0 || idx == pairs.size()) {
                    if (remaining != 0) return;
                    for (const auto& legs : leg_assignments) {
                        GraphShape s;
                        s.vertices = v;
                        s.mult = mult;
                        for (int i = 0; i < nl; ++i) s.legs[leg_labels[i]] = legs[i];
                        // validity: connected, no valence-one vertex
                        std::vector<int> val(v, 0);
                        for (const auto& [pr, m] : s.mult) {
                            val[pr.first] += m;
                            val[pr.second] += m;
                        }
                        for (const auto& [l, w] : s.legs) ++val[w];
                        bool ok = true;
                        for (int w = 0; w < v; ++w)
                            if (val[w] == 1) ok = false;
                        if (v == 1 && e == 0 && nl == 1) ok = true;  // one-leg corolla exception
                        if (!ok) continue;
                        // connectivity via union-find on edges
                        std::vector<int> parent(v);
                        std::iota(parent.begin(), parent.end(), 0);
                        std::function<int(int)> find = [&](int x) {
                            while (parent[x] != x) x = parent[x] = parent[parent[x]];
                            return x;
                        };
                        for (const auto& [pr, m] : s.mult) parent[find(pr.first)] = find(pr.second);
                        std::set<int> roots;
                        for (int w = 0; w < v; ++w) roots.insert(find(w));
                        if (roots.size() != 1) continue;
                        found.insert(canonical_shape(s));
                    }
                    return;
                }
                for (int take = 0; take <= remaining; ++take) {
                    if (take > 0) mult[pairs[idx]] = take;
                    rec(idx + 1, remaining - take, mult);
                    if (take > 0) mult.erase(pairs[idx]);
                }
            };
        if (e >= 0) {
            std::map<std::pair<int, int>, int> mult;
            rec(0, e, mult);
        }
    }

    std::vector<EnvelopeObject> out;
    for (const auto& s : found) out.push_back({graph_from_shape(s), genus});
    return out;
}

/// The functor value on objects of the genus-one story: [n] becomes the
/// circle with n+1 bivalent vertices.
inline Graph psi_object(int n) { return circle_graph(n); }

namespace detail {

/// Forest subsets of the internal edges of g (indices into internal_edges()):
/// subsets whose contraction preserves the Betti number.
inline std::vector<std::vector<int>> forest_edge_subsets(const Graph& g, int size) {
    auto edges = g.internal_edges();
    int ne = static_cast<int>(edges.size());
    std::vector<std::vector<int>> out;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(pick.size()) == size) {
            // acyclic check via union-find
            std::vector<int> parent(g.vertex_count());
            std::iota(parent.begin(), parent.end(), 0);
            std::function<int(int)> find = [&](int x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            for (int i : pick) {
                int a = find(g.attach(edges[i].first)), b = find(g.attach(edges[i].second));
                if (a == b) return;  // cycle: not a forest
                parent[a] = b;
            }
            out.push_back(pick);
            return;
        }
        for (int i = from; i < ne; ++i) {
            pick.push_back(i);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

inline Graph contract_edge_set(const Graph& g, const std::vector<int>& edge_indices) {
    Graph cur = g;
    std::size_t remaining = edge_indices.size();
    // re-identify edges by endpoints after each contraction: contract greedily
    // any non-loop edge whose endpoints are in the same union-find class plan
    // -- simpler: contract by repeatedly locating an edge from the original
    // set; we track original edges via leg-free structure, so instead contract
    // in order, recomputing indices.
    auto orig_edges = g.internal_edges();
    // mark original halves to contract; maintain a mapping of surviving halves
    std::vector<bool> kill(g.half_count(), false);
    for (int i : edge_indices) {
        kill[orig_edges[i].first] = true;
        kill[orig_edges[i].second] = true;
    }
    std::vector<int> where(g.half_count());
    std::iota(where.begin(), where.end(), 0);  // old half -> current half id, -1 if gone
    (void)remaining;
    for (;;) {
        // find a killed, still-present, non-loop edge in cur
        int pick = -1;
        for (int oh = 0; oh < g.half_count() && pick < 0; ++oh) {
            if (!kill[oh] || where[oh] < 0) continue;
            int ch = where[oh];
            if (cur.attach(ch) != cur.attach(cur.partner(ch))) pick = oh;
        }
        if (pick < 0) break;
        int ch = where[pick];
        int chp = cur.partner(ch);
        // build the half map the same way contract_edge does
        Graph nxt = contract_edge(cur, ch);
        // recompute `where`: replicate contract_edge's renumbering
        int u = cur.attach(ch), v = cur.attach(chp);
        auto new_vertex = [&](int w) {
            return w == v ? (u < v ? u : u - 1) : (w < v ? w : w - 1);
        };
        std::vector<int> cur_to_next(cur.half_count(), -1);
        {
            std::vector<std::vector<int>> plan(cur.vertex_count() - 1);
            for (int w = 0; w < cur.vertex_count(); ++w) {
                if (w == v) continue;
                for (int x : cur.halves_at(w))
                    if (x != ch) plan[new_vertex(w)].push_back(x);
                if (w == u)
                    for (int x : cur.halves_at(v))
                        if (x != chp) plan[new_vertex(u)].push_back(x);
            }
            int next_id = 0;
            for (auto& pl : plan)
                for (int x : pl) cur_to_next[x] = next_id++;
        }
        for (int oh = 0; oh < g.half_count(); ++oh)
            if (where[oh] >= 0) where[oh] = cur_to_next[where[oh]];
        cur = std::move(nxt);
    }
    return cur;
}

} // namespace detail

/// Number of morphisms src -> dst in the category of connected reduced
/// graphs over a fixed corolla: pairs of a forest edge subset of src (the
/// collapsed subtrees) and an identification of the contracted graph with
/// dst. Leg labels must match.
inline std::uint64_t hom_count(const Graph& src, const Graph& dst) {
    if (src.leg_labels() != dst.leg_labels()) return 0;
    int drop = src.vertex_count() - dst.vertex_count();
    if (drop < 0) return 0;
    std::uint64_t count = 0;
    GraphShape dst_canon = canonical_shape(shape_of(dst));
    std::uint64_t dst_aut = automorphism_count(dst);
    for (const auto& subset : detail::forest_edge_subsets(src, drop)) {
        Graph contracted = detail::contract_edge_set(src, subset);
        if (canonical_shape(shape_of(contracted)) == dst_canon) count += dst_aut;
    }
    return count;
}

} // namespace ansular
