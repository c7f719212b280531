#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "ansular/cyclotomic.hpp"
#include "ansular/gv_data.hpp"

namespace ansular {

using CycMatrix = std::vector<std::vector<Cyclotomic>>;

inline CycMatrix cyc_identity(int n) {
    CycMatrix m(n, std::vector<Cyclotomic>(n, Cyclotomic::zero()));
    for (int i = 0; i < n; ++i) m[i][i] = Cyclotomic::one();
    return m;
}

inline CycMatrix cyc_mul(const CycMatrix& a, const CycMatrix& b) {
    const int n = static_cast<int>(a.size());
    CycMatrix out(n, std::vector<Cyclotomic>(n, Cyclotomic::zero()));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < n; ++j)
                if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

inline bool cyc_eq(const CycMatrix& a, const CycMatrix& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    return true;
}

/// Basis of the torus block of a pointed datum: one summand per group
/// element a, standing for the pair (bar a, a); each pair multiplies to a0.
inline std::vector<int> torus_block_basis(const PointedDatum& p) {
    auto rep = validate_pointed(p);
    if (!rep.ok()) throw std::invalid_argument("torus_block_basis: invalid datum");
    std::vector<int> basis(p.group.order);
    for (int a = 0; a < p.group.order; ++a) {
        basis[a] = a;
        if (p.group.mul(p.bar(a), a) != p.a0())
            throw std::logic_error("torus_block_basis: degree mismatch");
    }
    return basis;
}

/// Dehn twist along the waist: diagonal with entries the balancing q(a).
inline CycMatrix t_matrix(const PointedDatum& p) {
    auto basis = torus_block_basis(p);
    CycMatrix m = cyc_identity(p.group.order);
    for (int a : basis) m[a][a] = p.q(a);
    return m;
}

namespace detail {

/// Braiding scalar on the dual pair (a, bar a) in the normalized skeleton:
/// the symmetric square c(a, bar a) c(bar a, a) equals the bicharacter
/// B(a, bar a), split by index order, with c(a, a) = q(a) on self-dual
/// elements. Convention-dependent; only the relations it induces on the
/// block are fixed.
inline Cyclotomic dual_pair_braiding(const PointedDatum& p, int a) {
    int abar = p.bar(a);
    if (a == abar) return p.q(a);
    if (a < abar) return p.bichar(a, abar);
    return Cyclotomic::one();
}

} // namespace detail

/// Rotation by pi: monomial matrix sending basis element a to bar a with
/// coefficient q(bar a) * c(a, bar a) from the shared composition
/// convention. Squares to the identity and commutes with the twist.
inline CycMatrix r_matrix(const PointedDatum& p) {
    auto basis = torus_block_basis(p);
    const int n = p.group.order;
    CycMatrix m(n, std::vector<Cyclotomic>(n, Cyclotomic::zero()));
    for (int a : basis) {
        int abar = p.bar(a);
        m[abar][a] = p.q(abar) * detail::dual_pair_braiding(p, a);
    }
    return m;
}

/// Images of the two mapping class group generators of the solid closed
/// torus inside SL(2,Z).
inline std::pair<std::array<std::array<int, 2>, 2>, std::array<std::array<int, 2>, 2>>
sl2z_shadow() {
    return {{{{{1, 0}}, {{1, 1}}}}, {{{{-1, 0}}, {{0, -1}}}}};
}

struct TorusRepChecks {
    bool t_diagonal_balancing = false;
    bool commute = false;
    bool r_squared_identity = false;
    bool all() const { return t_diagonal_balancing && commute && r_squared_identity; }
};

inline TorusRepChecks check_torus_rep(const PointedDatum& p) {
    TorusRepChecks c;
    auto t = t_matrix(p);
    auto r = r_matrix(p);
    c.t_diagonal_balancing = true;
    for (int a = 0; a < p.group.order; ++a) {
        if (t[a][a] != p.q(a)) c.t_diagonal_balancing = false;
        for (int b = 0; b < p.group.order; ++b)
            if (a != b && !t[a][b].is_zero()) c.t_diagonal_balancing = false;
    }
    c.commute = cyc_eq(cyc_mul(t, r), cyc_mul(r, t));
    c.r_squared_identity = cyc_eq(cyc_mul(r, r), cyc_identity(p.group.order));
    return c;
}

} // namespace ansular
