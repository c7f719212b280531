#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "ansular/cyclic.hpp"
#include "ansular/graph_enum.hpp"
#include "ansular/gv_data.hpp"

namespace ansular {

/// Generator relations of the cyclic category, checked exhaustively for all
/// valid indices up to max_n, plus reversal involutivity/functoriality.
inline ValidationReport cyclic_relation_suite(int max_n) {
    ValidationReport rep;
    auto w = [](const std::string& rel, int n, int i) {
        return rel + " n=" + std::to_string(n) + " i=" + std::to_string(i);
    };

    for (int n = 1; n <= max_n; ++n) {
        // delta_j delta_i = delta_i delta_{j-1} for i < j
        for (int i = 0; i <= n; ++i)
            for (int j = i + 1; j <= n + 1 && n + 1 <= max_n; ++j)
                if (compose(delta(i, n), delta(j, n + 1)) !=
                    compose(delta(j - 1, n), delta(i, n + 1)))
                    rep.fail("delta delta", w("", n, i));
        // sigma_j sigma_i = sigma_i sigma_{j+1} for i <= j
        for (int i = 0; i <= n - 1; ++i)
            for (int j = i; j <= n - 1; ++j)
                if (compose(sigma(j + 1, n), sigma(i, n - 1)) !=
                    compose(sigma(i, n), sigma(j, n - 1)))
                    rep.fail("sigma sigma", w("", n, i));
        // mixed delta/sigma relations
        for (int j = 0; j <= n - 1; ++j)
            for (int i = 0; i <= n; ++i) {
                CyclicMorphism lhs = compose(delta(i, n), sigma(j, n - 1));
                CyclicMorphism rhs;
                if (i < j)
                    rhs = compose(sigma(j - 1, n - 2 >= 0 ? n - 2 : 0), delta(i, n - 1));
                else if (i == j || i == j + 1)
                    rhs = cyclic_identity(n - 1);
                else
                    rhs = compose(sigma(j, n - 2 >= 0 ? n - 2 : 0), delta(i - 1, n - 1));
                if (n >= 2 || i == j || i == j + 1)
                    if (lhs != rhs) rep.fail("sigma delta", w("", n, i));
            }
    }
    for (int n = 0; n <= max_n; ++n) {
        // tau_n^{n+1} = id
        CyclicMorphism acc = cyclic_identity(n);
        for (int k = 0; k <= n; ++k) acc = compose(acc, tau(n));
        if (acc != cyclic_identity(n)) rep.fail("tau order", std::to_string(n));
        // tau delta and tau sigma relations
        if (n >= 1) {
            if (compose(delta(0, n), tau(n)) != delta(n, n))
                rep.fail("tau delta0", std::to_string(n));
            for (int i = 1; i <= n; ++i)
                if (compose(delta(i, n), tau(n)) != compose(tau(n - 1), delta(i - 1, n)))
                    rep.fail("tau delta", w("", n, i));
        }
        if (n + 1 <= max_n) {
            CyclicMorphism tt = compose(tau(n + 1), tau(n + 1));
            if (compose(sigma(0, n), tau(n)) != compose(tt, sigma(n, n)))
                rep.fail("tau sigma0", std::to_string(n));
            for (int j = 1; j <= n; ++j)
                if (compose(sigma(j, n), tau(n)) != compose(tau(n + 1), sigma(j - 1, n)))
                    rep.fail("tau sigma", w("", n, j));
        }
        // reversal: involution, functorial, r(tau) = tau^{-1}
        if (reversal(cyclic_identity(n)) != cyclic_identity(n))
            rep.fail("reversal identity", std::to_string(n));
        CyclicMorphism tinv = cyclic_identity(n);
        for (int k = 0; k < n; ++k) tinv = compose(tinv, tau(n));
        if (reversal(tau(n)) != tinv) rep.fail("reversal tau", std::to_string(n));
        if (n >= 1)
            for (int i = 0; i <= n; ++i) {
                if (reversal(reversal(delta(i, n))) != delta(i, n))
                    rep.fail("reversal involution", w("", n, i));
                // functoriality on a generator pair
                CyclicMorphism f = delta(i, n), g = tau(n);
                if (reversal(compose(f, g)) != compose(reversal(f), reversal(g)))
                    rep.fail("reversal functorial", w("", n, i));
            }
    }
    return rep;
}

/// Order of the automorphism group of [n] in the degeneracy-free dihedral
/// category (expected 2(n+1)), by exhaustive composition-closure over the
/// enumerated endomorphisms.
inline std::uint64_t dihedral_automorphism_order(int n) {
    std::uint64_t invertible = 0;
    auto endos = enumerate_dihedral(n, n);
    for (const auto& f : endos)
        for (const auto& g : endos)
            if (compose(f, g) == dihedral_identity(n) &&
                compose(g, f) == dihedral_identity(n)) {
                ++invertible;
                break;
            }
    return invertible;
}

/// Check the equivalence with genus-one reduced graphs on hom-set
/// cardinalities and on functoriality of the arrow assignment.
inline ValidationReport psi_equivalence_suite(int max_n) {
    ValidationReport rep;
    auto w2 = [](int m, int n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; };
    for (int m = 0; m <= max_n; ++m)
        for (int n = m; n <= max_n; ++n) {
            auto arrows = enumerate_dihedral(m, n);
            // injectivity of the functor on each hom-set
            std::set<CircleCollapse> images;
            for (const auto& f : arrows) images.insert(psi_arrow(f));
            if (images.size() != arrows.size()) rep.fail("psi injective", w2(m, n));
            // hom count against the graph category: arrows [m] -> [n] here
            // correspond to graph morphisms (n+1)-circle -> (m+1)-circle
            std::uint64_t graph_homs = hom_count(circle_graph(n), circle_graph(m));
            if (graph_homs != arrows.size()) rep.fail("psi hom count", w2(m, n));
        }
    // functoriality on all composable pairs up to max_n
    for (int a = 0; a <= max_n; ++a)
        for (int b = a; b <= max_n; ++b)
            for (int c = b; c <= max_n; ++c)
                for (const auto& f : enumerate_dihedral(a, b))
                    for (const auto& g : enumerate_dihedral(b, c)) {
                        // composite in the opposite reading: g after f at the
                        // index level is psi(f) after psi(g) on circles
                        auto lhs = psi_arrow(compose(f, g));
                        auto rhs = compose(psi_arrow(g), psi_arrow(f));
                        if (lhs != rhs) rep.fail("psi functorial", w2(a, c));
                    }
    return rep;
}

/// Unique factorization: every arrow [m] -> [n] is an automorphism of [n]
/// composed with the standard monotone injection anchored at 0.
inline ValidationReport dihedral_factorization_suite(int max_n) {
    ValidationReport rep;
    for (int m = 0; m <= max_n; ++m)
        for (int n = m; n <= max_n; ++n) {
            // automorphisms of [n]
            std::vector<DihedralMorphism> autos;
            for (const auto& f : enumerate_dihedral(n, n))
                for (const auto& g : enumerate_dihedral(n, n))
                    if (compose(f, g) == dihedral_identity(n) &&
                        compose(g, f) == dihedral_identity(n)) {
                        autos.push_back(f);
                        break;
                    }
            for (const auto& f : enumerate_dihedral(m, n)) {
                int hits = 0;
                for (const auto& inj : enumerate_injective_cyclic(m, n)) {
                    if (inj.values[0] != 0) continue;  // anchored representative
                    for (const auto& a : autos)
                        if (compose(DihedralMorphism{inj, false}, a) == f) ++hits;
                }
                if (hits != 1)
                    rep.fail("unique factorization",
                             "(" + std::to_string(m) + "," + std::to_string(n) + ") " +
                                 f.base.str() + (f.flip ? "!" : ""));
            }
        }
    return rep;
}

} // namespace ansular
