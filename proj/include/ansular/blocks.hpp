#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ansular/graph.hpp"
#include "ansular/graph_enum.hpp"
#include "ansular/gv_data.hpp"

namespace ansular {

/// Handlebody of genus g with an ordered list of boundary labels.
struct HandlebodySignature {
    int genus = 0;
    std::vector<int> labels;
};

struct BlockResult {
    HandlebodySignature signature;
    std::uint64_t dimension = 0;
    std::string method;  // "coend" | "graph" | "pointed" | "oracle"
};

inline void check_labels(const FusionDatum& d, const std::vector<int>& labels) {
    for (int l : labels)
        if (l < 0 || l >= d.rank) throw std::invalid_argument("invalid label " + std::to_string(l));
}

/// Multiplicity of the dualizing label in the ordered product of the given
/// labels, by iterated fusion. The empty product is the unit.
inline std::uint64_t genus_zero_dim(const FusionDatum& d, const std::vector<int>& labels) {
    check_labels(d, labels);
    std::vector<std::uint64_t> mult(d.rank, 0);
    mult[0] = 1;
    for (int l : labels) {
        std::vector<std::uint64_t> next(d.rank, 0);
        for (int b = 0; b < d.rank; ++b) {
            if (mult[b] == 0) continue;
            for (int c = 0; c < d.rank; ++c)
                next[c] += mult[b] * static_cast<std::uint64_t>(d.n(b, l, c));
        }
        mult = std::move(next);
    }
    return mult[d.kappa];
}

/// Dimension of the space attached to a genus-g handlebody with labeled
/// boundary disks: sum over g-tuples of labels of the genus-zero dimension
/// of labels ++ (bar a1, a1, ..., bar ag, ag).
inline BlockResult handlebody_dim(const FusionDatum& d, const HandlebodySignature& s,
                                  std::uint64_t budget = 10'000'000) {
    check_labels(d, s.labels);
    if (s.genus < 0) throw std::invalid_argument("genus must be nonnegative");
    std::uint64_t terms = 1;
    for (int i = 0; i < s.genus; ++i) {
        terms *= static_cast<std::uint64_t>(d.rank);
        if (terms > budget) throw std::length_error("handlebody_dim: term budget exceeded");
    }
    std::vector<int> tuple(s.genus, 0);
    std::uint64_t total = 0;
    for (;;) {
        std::vector<int> labels = s.labels;
        for (int a : tuple) {
            labels.push_back(d.bar[a]);
            labels.push_back(a);
        }
        total += genus_zero_dim(d, labels);
        int i = s.genus - 1;
        while (i >= 0 && tuple[i] == d.rank - 1) tuple[i--] = 0;
        if (i < 0) break;
        ++tuple[i];
    }
    return {s, total, "coend"};
}

/// Gluing computation on a connected graph: sum over labelings of internal
/// edges (label a on the smaller half, bar a on its partner) of the product
/// over vertices of the genus-zero dimension at that vertex, labels read in
/// slot order. Equals handlebody_dim for (b1, legs) on valid data.
inline BlockResult graph_glue_dim(const FusionDatum& d, const Graph& gamma,
                                  const std::map<std::string, int>& leg_labels,
                                  std::uint64_t budget = 10'000'000) {
    if (!gamma.is_connected())
        throw std::invalid_argument("graph_glue_dim: graph must be connected");
    for (const auto& l : gamma.leg_labels())
        if (!leg_labels.count(l))
            throw std::invalid_argument("graph_glue_dim: unlabeled leg " + l);
    if (leg_labels.size() != gamma.leg_labels().size())
        throw std::invalid_argument("graph_glue_dim: leg/label mismatch");
    for (const auto& [l, a] : leg_labels) check_labels(d, {a});

    auto edges = gamma.internal_edges();
    std::uint64_t terms = 1;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        terms *= static_cast<std::uint64_t>(d.rank);
        if (terms > budget) throw std::length_error("graph_glue_dim: term budget exceeded");
    }

    std::vector<int> assign(edges.size(), 0);
    std::uint64_t total = 0;
    for (;;) {
        std::uint64_t prod = 1;
        for (int v = 0; v < gamma.vertex_count() && prod > 0; ++v) {
            std::vector<int> at_vertex;
            for (int h : gamma.halves_at(v)) {
                if (gamma.is_leg(h)) {
                    at_vertex.push_back(leg_labels.at(gamma.leg_label(h)));
                    continue;
                }
                for (std::size_t e = 0; e < edges.size(); ++e) {
                    if (edges[e].first == h) at_vertex.push_back(assign[e]);
                    else if (edges[e].second == h) at_vertex.push_back(d.bar[assign[e]]);
                }
            }
            prod *= genus_zero_dim(d, at_vertex);
        }
        total += prod;
        int i = static_cast<int>(edges.size()) - 1;
        while (i >= 0 && assign[i] == d.rank - 1) assign[i--] = 0;
        if (i < 0) break;
        ++assign[i];
    }

    std::vector<int> sig_labels;
    for (const auto& l : gamma.leg_labels()) sig_labels.push_back(leg_labels.at(l));
    return {{gamma.betti(), sig_labels}, total, "graph"};
}

/// Closed form for pointed data: |G|^g when (product of labels) * a0^g = a0,
/// else 0.
inline BlockResult pointed_dim(const PointedDatum& p, const HandlebodySignature& s) {
    auto rep = validate_pointed(p);
    if (!rep.ok()) throw std::invalid_argument("pointed_dim: invalid datum");
    for (int l : s.labels)
        if (l < 0 || l >= p.group.order) throw std::invalid_argument("pointed_dim: invalid element");
    int prod = 0;
    for (int l : s.labels) prod = p.group.mul(prod, l);
    int lhs = p.group.mul(prod, p.group.pow(p.a0(), s.genus));
    std::uint64_t dim = 0;
    if (lhs == p.a0()) {
        dim = 1;
        for (int i = 0; i < s.genus; ++i) dim *= static_cast<std::uint64_t>(p.group.order);
    }
    return {s, dim, "pointed"};
}

/// Burnside count of orbits of G acting on G^g by simultaneous conjugation:
/// (1/|G|) sum_x |C_G(x)|^g.
inline std::uint64_t orbit_oracle(const GroupTable& g, int genus) {
    auto rep = g.validate(/*require_abelian=*/false);
    if (!rep.ok()) throw std::invalid_argument("orbit_oracle: malformed group table");
    if (genus < 0) throw std::invalid_argument("orbit_oracle: genus must be nonnegative");
    std::uint64_t sum = 0;
    for (int x = 0; x < g.order; ++x) {
        std::uint64_t cent = 0;
        for (int y = 0; y < g.order; ++y)
            if (g.mul(x, y) == g.mul(y, x)) ++cent;
        std::uint64_t pw = 1;
        for (int i = 0; i < genus; ++i) pw *= cent;
        sum += pw;
    }
    return sum / static_cast<std::uint64_t>(g.order);
}

} // namespace ansular
