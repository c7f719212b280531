#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ansular/graph.hpp"
#include "ansular/graph_enum.hpp"

namespace ansular {

/// Morphism [n] -> [m] of the cyclic category: an equivalence class of maps
/// f: Z -> Z with f(i + n + 1) = f(i) + m + 1, where f and f + k(m+1) are
/// identified. Representatives are nondecreasing and normalized so that
/// 0 <= f(0) <= m. Equality is then list comparison.
struct CyclicMorphism {
    int src = 0;                      // object [src]
    int dst = 0;                      // object [dst]
    std::vector<std::int64_t> values; // f(0), ..., f(src), normalized

    friend bool operator==(const CyclicMorphism& a, const CyclicMorphism& b) {
        return a.src == b.src && a.dst == b.dst && a.values == b.values;
    }
    friend bool operator!=(const CyclicMorphism& a, const CyclicMorphism& b) { return !(a == b); }
    friend bool operator<(const CyclicMorphism& a, const CyclicMorphism& b) {
        if (a.src != b.src) return a.src < b.src;
        if (a.dst != b.dst) return a.dst < b.dst;
        return a.values < b.values;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[" << src << "]->[" << dst << "]:(";
        for (std::size_t i = 0; i < values.size(); ++i)
            os << (i ? "," : "") << values[i];
        os << ")";
        return os.str();
    }
};

inline CyclicMorphism make_cyclic(int src, int dst, std::vector<std::int64_t> values) {
    if (src < 0 || dst < 0) throw std::invalid_argument("cyclic morphism: objects are [n], n >= 0");
    if (static_cast<int>(values.size()) != src + 1)
        throw std::invalid_argument("cyclic morphism: need src+1 values");
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
        if (values[i] > values[i + 1])
            throw std::invalid_argument("cyclic morphism: representative must be nondecreasing");
    if (values.back() > values.front() + dst + 1)
        throw std::invalid_argument("cyclic morphism: representative exceeds one period");
    CyclicMorphism f{src, dst, std::move(values)};
    // normalize: 0 <= f(0) <= dst
    std::int64_t period = dst + 1;
    std::int64_t shift = ((f.values[0] % period) + period) % period - f.values[0];
    for (auto& v : f.values) v += shift;
    return f;
}

inline CyclicMorphism cyclic_identity(int n) {
    std::vector<std::int64_t> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = i;
    return make_cyclic(n, n, std::move(v));
}

/// Face map delta_i: [n-1] -> [n], the injection skipping i (0 <= i <= n).
inline CyclicMorphism delta(int i, int n) {
    if (n < 1 || i < 0 || i > n) throw std::invalid_argument("delta: need n >= 1, 0 <= i <= n");
    std::vector<std::int64_t> v(n);
    for (int p = 0; p < n; ++p) v[p] = p < i ? p : p + 1;
    return make_cyclic(n - 1, n, std::move(v));
}

/// Degeneracy sigma_j: [n+1] -> [n], the surjection repeating j (0 <= j <= n).
inline CyclicMorphism sigma(int j, int n) {
    if (n < 0 || j < 0 || j > n) throw std::invalid_argument("sigma: need 0 <= j <= n");
    std::vector<std::int64_t> v(n + 2);
    for (int p = 0; p <= n + 1; ++p) v[p] = p <= j ? p : p - 1;
    return make_cyclic(n + 1, n, std::move(v));
}

/// Cyclic rotation tau_n: [n] -> [n], p -> p - 1, with tau_n^{n+1} = id.
inline CyclicMorphism tau(int n) {
    if (n < 0) throw std::invalid_argument("tau: n >= 0");
    std::vector<std::int64_t> v(n + 1);
    for (int p = 0; p <= n; ++p) v[p] = p - 1;
    // shift into normal form directly
    for (auto& x : v) x += n + 1;
    return make_cyclic(n, n, std::move(v));
}

/// Evaluate the periodic extension of f at an arbitrary integer.
inline std::int64_t cyclic_eval(const CyclicMorphism& f, std::int64_t p) {
    std::int64_t n1 = f.src + 1, m1 = f.dst + 1;
    std::int64_t q = p >= 0 ? p / n1 : -((-p + n1 - 1) / n1);
    std::int64_t r = p - q * n1;
    return f.values[static_cast<std::size_t>(r)] + q * m1;
}

/// g after f (objects must match).
inline CyclicMorphism compose(const CyclicMorphism& f, const CyclicMorphism& g) {
    if (f.dst != g.src) throw std::invalid_argument("cyclic compose: object mismatch");
    std::vector<std::int64_t> v(f.src + 1);
    for (int p = 0; p <= f.src; ++p) v[p] = cyclic_eval(g, f.values[p]);
    return make_cyclic(f.src, g.dst, std::move(v));
}

/// Reversal involution: identity on objects, f -> (p -> m - f(n - p)).
inline CyclicMorphism reversal(const CyclicMorphism& f) {
    std::vector<std::int64_t> v(f.src + 1);
    for (int p = 0; p <= f.src; ++p) v[p] = f.dst - cyclic_eval(f, f.src - p);
    return make_cyclic(f.src, f.dst, std::move(v));
}

/// True iff f factors through no degeneracy, i.e. its representative is
/// strictly increasing. These are the morphisms generated by faces and
/// cyclic rotations.
inline bool is_degeneracy_free(const CyclicMorphism& f) {
    for (std::size_t i = 0; i + 1 < f.values.size(); ++i)
        if (f.values[i] == f.values[i + 1]) return false;
    return f.src <= f.dst;
}

/// Morphism of the (semi)dihedral extension: a cyclic morphism together with
/// a flip. Composition twists by the reversal functor:
/// (g, e2) after (f, e1) = (g o r^{e2}(f), e1 xor e2).
struct DihedralMorphism {
    CyclicMorphism base;
    bool flip = false;

    friend bool operator==(const DihedralMorphism& a, const DihedralMorphism& b) {
        return a.flip == b.flip && a.base == b.base;
    }
    friend bool operator<(const DihedralMorphism& a, const DihedralMorphism& b) {
        if (a.flip != b.flip) return a.flip < b.flip;
        return a.base < b.base;
    }
};

inline DihedralMorphism compose(const DihedralMorphism& f, const DihedralMorphism& g) {
    CyclicMorphism twisted = g.flip ? reversal(f.base) : f.base;
    return DihedralMorphism{compose(twisted, g.base), f.flip != g.flip};
}

inline DihedralMorphism dihedral_identity(int n) { return {cyclic_identity(n), false}; }

/// All degeneracy-free morphisms [n] -> [m] of the cyclic category:
/// strictly increasing representatives with 0 <= f(0) <= m.
inline std::vector<CyclicMorphism> enumerate_injective_cyclic(int n, int m) {
    std::vector<CyclicMorphism> out;
    if (n > m) return out;
    std::vector<std::int64_t> v(n + 1);
    // choose f(0) in [0, m], then n strictly increasing values below f(0)+m+1
    std::vector<int> idx(n);
    std::function<void(int, int)> rec = [&](int pos, int from) {
        if (pos == n + 1) {
            out.push_back(make_cyclic(n, m, v));
            return;
        }
        for (std::int64_t x = from; x < v[0] + m + 1; ++x) {
            v[pos] = x;
            rec(pos + 1, static_cast<int>(x) + 1);
        }
    };
    for (std::int64_t f0 = 0; f0 <= m; ++f0) {
        v[0] = f0;
        rec(1, static_cast<int>(f0) + 1);
    }
    return out;
}

/// All morphisms [n] -> [m] of the degeneracy-free dihedral category.
inline std::vector<DihedralMorphism> enumerate_dihedral(int n, int m) {
    std::vector<DihedralMorphism> out;
    for (const auto& f : enumerate_injective_cyclic(n, m)) {
        out.push_back({f, false});
        out.push_back({f, true});
    }
    return out;
}

/// Collapse morphism between circle graphs: the data of a functor value on a
/// degeneracy-free dihedral arrow, i.e. an edge subset of the source circle
/// to contract plus the vertex map to the target circle.
struct CircleCollapse {
    int src_n = 0;  // source circle has src_n + 1 vertices
    int dst_n = 0;
    std::vector<bool> collapse_edge;  // indexed by source edge i (between i, i+1)
    std::vector<int> vertex_map;      // source vertex -> target vertex
    bool reflected = false;           // whole map reverses the circle orientation

    friend bool operator==(const CircleCollapse& a, const CircleCollapse& b) {
        return a.src_n == b.src_n && a.dst_n == b.dst_n && a.reflected == b.reflected &&
               a.collapse_edge == b.collapse_edge && a.vertex_map == b.vertex_map;
    }
    friend bool operator<(const CircleCollapse& a, const CircleCollapse& b) {
        if (a.src_n != b.src_n) return a.src_n < b.src_n;
        if (a.dst_n != b.dst_n) return a.dst_n < b.dst_n;
        if (a.reflected != b.reflected) return a.reflected < b.reflected;
        if (a.collapse_edge != b.collapse_edge) return a.collapse_edge < b.collapse_edge;
        return a.vertex_map < b.vertex_map;
    }
};

/// second after first. A surviving source edge (i, i+1) maps to the middle
/// edge starting at the image of i when the map preserves orientation, and
/// to the one starting at the image of i+1 when it reverses it.
inline CircleCollapse compose(const CircleCollapse& first, const CircleCollapse& second) {
    if (first.dst_n != second.src_n)
        throw std::invalid_argument("CircleCollapse compose: object mismatch");
    CircleCollapse out;
    out.src_n = first.src_n;
    out.dst_n = second.dst_n;
    out.reflected = first.reflected != second.reflected;
    out.vertex_map.resize(first.src_n + 1);
    out.collapse_edge.resize(first.src_n + 1);
    const int sv = first.src_n + 1;
    for (int i = 0; i < sv; ++i) {
        out.vertex_map[i] = second.vertex_map[first.vertex_map[i]];
        int mid_edge = first.reflected ? first.vertex_map[(i + 1) % sv] : first.vertex_map[i];
        out.collapse_edge[i] = first.collapse_edge[i] || second.collapse_edge[mid_edge];
    }
    return out;
}

/// The equivalence functor on arrows of the degeneracy-free dihedral
/// category, read contravariantly: an arrow [n] -> [m] (with n >= m after
/// dualizing) becomes a collapse of the (n+1)-circle onto the (m+1)-circle.
/// delta_i contracts the edge between vertices i and i+1 mod (n+1), tau
/// rotates, the flip reflects i -> n+1-i mod (n+1).
inline CircleCollapse psi_arrow(const DihedralMorphism& d) {
    if (!is_degeneracy_free(d.base))
        throw std::invalid_argument("psi_arrow: degeneracy-free morphisms only");
    const CyclicMorphism& f = d.base;  // [m] -> [n] in the cyclic category
    int m = f.src, n = f.dst;
    CircleCollapse c;
    c.src_n = n;
    c.dst_n = m;
    c.collapse_edge.assign(n + 1, true);
    c.vertex_map.assign(n + 1, -1);
    // vertex f(p) mod n+1 of the source circle survives as target vertex p;
    // the arc (f(p-1), f(p)] collapses onto it, so delta_i contracts the edge
    // between vertices i and i+1 mod (n+1)
    auto mod = [](std::int64_t x, int k) { return static_cast<int>(((x % k) + k) % k); };
    for (int p = 0; p <= m; ++p) {
        std::int64_t lo = cyclic_eval(f, p - 1) + 1, hi = cyclic_eval(f, p);
        for (std::int64_t x = lo; x <= hi; ++x) c.vertex_map[mod(x, n + 1)] = p;
        c.collapse_edge[mod(hi, n + 1)] = false;  // edge from f(p) to the next fiber survives
    }
    for (int i = 0; i <= n; ++i)
        if (c.vertex_map[i] < 0)
            throw std::logic_error("psi_arrow: uncovered source vertex");
    if (d.flip) {
        // (f, flip) factors as (f, 0) after the flip at the source object, so
        // on circles the reflection i -> m+1-i acts on the target after the
        // collapse; the collapsed edge set of the source is unchanged
        c.reflected = true;
        for (int i = 0; i <= n; ++i) c.vertex_map[i] = mod(m + 1 - c.vertex_map[i], m + 1);
    }
    return c;
}

} // namespace ansular
