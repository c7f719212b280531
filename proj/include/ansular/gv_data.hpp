#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ansular/cyclotomic.hpp"

namespace ansular {

/// One failed constraint with a witness, collected during validation.
struct ValidationFailure {
    std::string check;
    std::string witness;
};

struct ValidationReport {
    std::vector<ValidationFailure> failures;
    bool ok() const { return failures.empty(); }
    void fail(const std::string& check, const std::string& witness) {
        failures.push_back({check, witness});
    }
};

/// Skeletal semisimple ribbon Grothendieck-Verdier datum: labels 0..rank-1
/// with label 0 the unit, fusion coefficients N, the dual involution and the
/// dualizing label.
struct FusionDatum {
    int rank = 0;
    std::vector<int> N;        // rank^3, N[(a*rank + b)*rank + c] = N_{ab}^c
    std::vector<int> bar;      // involution on labels
    int kappa = 0;             // dualizing label

    int n(int a, int b, int c) const {
        return N[(static_cast<std::size_t>(a) * rank + b) * rank + c];
    }

    nlohmann::json to_json() const {
        std::vector<std::vector<std::vector<int>>> cube(
            rank, std::vector<std::vector<int>>(rank, std::vector<int>(rank)));
        for (int a = 0; a < rank; ++a)
            for (int b = 0; b < rank; ++b)
                for (int c = 0; c < rank; ++c) cube[a][b][c] = n(a, b, c);
        return nlohmann::json{{"rank", rank}, {"N", cube}, {"bar", bar}, {"kappa", kappa}};
    }

    static FusionDatum from_json(const nlohmann::json& j) {
        FusionDatum d;
        d.rank = j.at("rank").get<int>();
        if (d.rank < 1) throw std::invalid_argument("fusion json: rank >= 1");
        auto cube = j.at("N").get<std::vector<std::vector<std::vector<int>>>>();
        d.N.assign(static_cast<std::size_t>(d.rank) * d.rank * d.rank, 0);
        if (static_cast<int>(cube.size()) != d.rank)
            throw std::invalid_argument("fusion json: N shape");
        for (int a = 0; a < d.rank; ++a) {
            if (static_cast<int>(cube[a].size()) != d.rank)
                throw std::invalid_argument("fusion json: N shape");
            for (int b = 0; b < d.rank; ++b) {
                if (static_cast<int>(cube[a][b].size()) != d.rank)
                    throw std::invalid_argument("fusion json: N shape");
                for (int c = 0; c < d.rank; ++c)
                    d.N[(static_cast<std::size_t>(a) * d.rank + b) * d.rank + c] = cube[a][b][c];
            }
        }
        d.bar = j.at("bar").get<std::vector<int>>();
        d.kappa = j.at("kappa").get<int>();
        if (static_cast<int>(d.bar.size()) != d.rank || d.kappa < 0 || d.kappa >= d.rank)
            throw std::invalid_argument("fusion json: bar/kappa shape");
        return d;
    }
};

/// Validate all structural constraints of a fusion datum. Failures are
/// reported with witnesses rather than thrown.
inline ValidationReport validate_fusion(const FusionDatum& d) {
    ValidationReport rep;
    const int r = d.rank;
    auto w = [](std::initializer_list<int> xs) {
        std::ostringstream os;
        os << "(";
        bool first = true;
        for (int x : xs) { os << (first ? "" : ",") << x; first = false; }
        os << ")";
        return os.str();
    };

    for (std::size_t i = 0; i < d.N.size(); ++i)
        if (d.N[i] < 0) { rep.fail("nonnegativity", "entry " + std::to_string(i)); break; }

    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
            if (d.n(0, a, b) != (a == b ? 1 : 0)) rep.fail("unit law (left)", w({a, b}));
            if (d.n(a, 0, b) != (a == b ? 1 : 0)) rep.fail("unit law (right)", w({a, b}));
        }

    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                for (int dd = 0; dd < r; ++dd) {
                    long lhs = 0, rhs = 0;
                    for (int e = 0; e < r; ++e) lhs += static_cast<long>(d.n(a, b, e)) * d.n(e, c, dd);
                    for (int f = 0; f < r; ++f) rhs += static_cast<long>(d.n(b, c, f)) * d.n(a, f, dd);
                    if (lhs != rhs) rep.fail("associativity", w({a, b, c, dd}));
                }

    for (int a = 0; a < r; ++a) {
        if (d.bar[a] < 0 || d.bar[a] >= r) { rep.fail("bar range", w({a})); continue; }
        if (d.bar[d.bar[a]] != a) rep.fail("bar involution", w({a}));
    }

    // duality against the dualizing label: N_{ab}^kappa = delta_{b, bar(a)}
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            if (d.bar[a] < r && d.n(a, b, d.kappa) != (b == d.bar[a] ? 1 : 0))
                rep.fail("duality at kappa", w({a, b}));

    return rep;
}

/// True iff the dualizing object is the monoidal unit.
inline bool is_r_category(const FusionDatum& d) { return d.kappa == 0; }

/// Multiplication table of a finite group; element 0 is the identity.
struct GroupTable {
    int order = 0;
    std::vector<int> table;  // table[a*order + b] = a*b

    int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * order + b]; }

    int inv(int a) const {
        for (int b = 0; b < order; ++b)
            if (mul(a, b) == 0) return b;
        throw std::invalid_argument("group table: no inverse");
    }

    int pow(int a, int e) const {
        int x = 0;
        int base = e >= 0 ? a : inv(a);
        for (int i = 0; i < (e >= 0 ? e : -e); ++i) x = mul(x, base);
        return x;
    }

    ValidationReport validate(bool require_abelian) const {
        ValidationReport rep;
        if (order < 1 || static_cast<int>(table.size()) != order * order) {
            rep.fail("group shape", "order " + std::to_string(order));
            return rep;
        }
        for (int x : table)
            if (x < 0 || x >= order) { rep.fail("group entries", "out of range"); return rep; }
        for (int a = 0; a < order; ++a)
            if (mul(0, a) != a || mul(a, 0) != a) rep.fail("group identity", std::to_string(a));
        for (int a = 0; a < order; ++a) {
            bool has_inv = false;
            for (int b = 0; b < order; ++b) has_inv |= (mul(a, b) == 0);
            if (!has_inv) rep.fail("group inverses", std::to_string(a));
        }
        for (int a = 0; a < order && rep.ok(); ++a)
            for (int b = 0; b < order; ++b)
                for (int c = 0; c < order; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
                        rep.fail("group associativity",
                                 "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                     std::to_string(c) + ")");
                        b = c = order;
                    }
        if (require_abelian)
            for (int a = 0; a < order; ++a)
                for (int b = 0; b < order; ++b)
                    if (mul(a, b) != mul(b, a)) {
                        rep.fail("abelian", "(" + std::to_string(a) + "," + std::to_string(b) + ")");
                        a = b = order;
                    }
        return rep;
    }
};

inline GroupTable cyclic_group(int n) {
    GroupTable g;
    g.order = n;
    g.table.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    return g;
}

inline GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
    GroupTable p;
    p.order = g.order * h.order;
    p.table.resize(static_cast<std::size_t>(p.order) * p.order);
    auto enc = [&](int a, int b) { return a * h.order + b; };
    for (int a1 = 0; a1 < g.order; ++a1)
        for (int a2 = 0; a2 < h.order; ++a2)
            for (int b1 = 0; b1 < g.order; ++b1)
                for (int b2 = 0; b2 < h.order; ++b2)
                    p.table[static_cast<std::size_t>(enc(a1, a2)) * p.order + enc(b1, b2)] =
                        enc(g.mul(a1, b1), h.mul(a2, b2));
    return p;
}

/// Pointed datum: finite abelian group with a quadratic form stored as
/// exponents of a fixed primitive root of unity, plus the square root b0 of
/// the inverse dualizing element (a0 = b0^{-2}).
struct PointedDatum {
    GroupTable group;
    int root_order = 1;          // M, q(a) = zeta_M^{q_exp[a]}
    std::vector<int> q_exp;
    int b0 = 0;

    int a0() const { return group.inv(group.mul(b0, b0)); }

    /// bar(a) = a0 * a^{-1}
    int bar(int a) const { return group.mul(a0(), group.inv(a)); }

    Cyclotomic q(int a) const { return Cyclotomic::root_of_unity(root_order, q_exp[a]); }

    /// exponent of the associated bicharacter B(a,b) = q(ab)/(q(a)q(b))
    int b_exp(int a, int b) const {
        int e = q_exp[group.mul(a, b)] - q_exp[a] - q_exp[b];
        return ((e % root_order) + root_order) % root_order;
    }

    Cyclotomic bichar(int a, int b) const {
        return Cyclotomic::root_of_unity(root_order, b_exp(a, b));
    }

    nlohmann::json to_json() const {
        return nlohmann::json{
            {"group", {{"order", group.order}, {"table", table_rows()}}},
            {"q", {{"root_order", root_order}, {"exponents", q_exp}}},
            {"b0", b0}};
    }

    static PointedDatum from_json(const nlohmann::json& j) {
        PointedDatum p;
        const auto& gj = j.at("group");
        p.group.order = gj.at("order").get<int>();
        auto rows = gj.at("table").get<std::vector<std::vector<int>>>();
        if (static_cast<int>(rows.size()) != p.group.order)
            throw std::invalid_argument("pointed json: table shape");
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != p.group.order)
                throw std::invalid_argument("pointed json: table shape");
            p.group.table.insert(p.group.table.end(), row.begin(), row.end());
        }
        p.root_order = j.at("q").at("root_order").get<int>();
        p.q_exp = j.at("q").at("exponents").get<std::vector<int>>();
        p.b0 = j.at("b0").get<int>();
        if (p.root_order < 1 || static_cast<int>(p.q_exp.size()) != p.group.order ||
            p.b0 < 0 || p.b0 >= p.group.order)
            throw std::invalid_argument("pointed json: q/b0 shape");
        return p;
    }

private:
    std::vector<std::vector<int>> table_rows() const {
        std::vector<std::vector<int>> rows(group.order, std::vector<int>(group.order));
        for (int a = 0; a < group.order; ++a)
            for (int b = 0; b < group.order; ++b) rows[a][b] = group.mul(a, b);
        return rows;
    }
};

/// Validate a pointed datum: abelian group axioms, normalization q(1) = 1,
/// the bicharacter property of B, the balancing constraint on duals
/// q(a0 a^{-1}) = q(a), and the order-4 constraint on self-dual elements
/// (the twist on the dualizing object must be trivial).
inline ValidationReport validate_pointed(const PointedDatum& p) {
    ValidationReport rep = p.group.validate(/*require_abelian=*/true);
    if (!rep.ok()) return rep;
    const int m = p.root_order;
    auto norm = [&](int e) { return ((e % m) + m) % m; };
    for (int e : p.q_exp)
        if (e < 0 || e >= m) { rep.fail("q exponents", "out of range"); return rep; }
    if (norm(p.q_exp[0]) != 0) rep.fail("q at unit", "q(1) != 1");
    for (int a = 0; a < p.group.order; ++a)
        for (int b = 0; b < p.group.order; ++b)
            for (int c = 0; c < p.group.order; ++c)
                if (p.b_exp(p.group.mul(a, b), c) !=
                    norm(p.b_exp(a, c) + p.b_exp(b, c)))
                    rep.fail("bicharacter", "(" + std::to_string(a) + "," + std::to_string(b) +
                                                "," + std::to_string(c) + ")");
    const int a0 = p.a0();
    for (int a = 0; a < p.group.order; ++a)
        if (p.q_exp[p.group.mul(a0, p.group.inv(a))] != p.q_exp[a])
            rep.fail("balancing on duals", std::to_string(a));
    for (int a = 0; a < p.group.order; ++a)
        if (p.bar(a) == a && norm(4 * p.q_exp[a]) != 0)
            rep.fail("self-dual twist order", std::to_string(a));
    return rep;
}

/// The fusion datum of a pointed datum: group fusion, bar(a) = a0 a^{-1},
/// dualizing label a0.
inline FusionDatum pointed_to_fusion(const PointedDatum& p) {
    auto rep = validate_pointed(p);
    if (!rep.ok())
        throw std::invalid_argument("pointed_to_fusion: invalid datum: " + rep.failures[0].check);
    const int n = p.group.order;
    FusionDatum d;
    d.rank = n;
    d.N.assign(static_cast<std::size_t>(n) * n * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            d.N[(static_cast<std::size_t>(a) * n + b) * n + p.group.mul(a, b)] = 1;
    d.bar.resize(n);
    for (int a = 0; a < n; ++a) d.bar[a] = p.bar(a);
    d.kappa = p.a0();
    return d;
}

} // namespace ansular
