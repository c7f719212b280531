#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "ansular/gv_data.hpp"

namespace ansular {

/// All abelian groups of order <= max_order, one per isomorphism class,
/// as direct products of cyclic groups.
inline std::vector<std::pair<std::string, GroupTable>> abelian_groups_up_to(int max_order) {
    std::vector<std::pair<std::string, GroupTable>> out;
    // partitions of each order into cyclic factors n1 | n2 | ... (invariant
    // factor form avoids duplicates like Z2 x Z3 = Z6)
    for (int order = 1; order <= max_order; ++order) {
        std::vector<std::vector<int>> stack;
        std::function<void(int, int, std::vector<int>&)> rec = [&](int rem, int max_f,
                                                                   std::vector<int>& cur) {
            if (rem == 1) {
                stack.push_back(cur);
                return;
            }
            for (int f = 2; f <= max_f; ++f) {
                if (rem % f != 0) continue;
                // invariant factors: each divides the next; build descending
                if (!cur.empty() && cur.back() % f != 0) continue;
                cur.push_back(f);
                rec(rem / f, f, cur);
                cur.pop_back();
            }
        };
        std::vector<int> cur;
        rec(order, order, cur);
        if (order == 1) stack.push_back({});
        for (const auto& factors : stack) {
            GroupTable g = cyclic_group(1);
            std::string name = "Z1";
            if (!factors.empty()) {
                g = cyclic_group(factors[0]);
                name = "Z" + std::to_string(factors[0]);
                for (std::size_t i = 1; i < factors.size(); ++i) {
                    g = direct_product(g, cyclic_group(factors[i]));
                    name += "xZ" + std::to_string(factors[i]);
                }
            }
            out.emplace_back(name, g);
        }
    }
    return out;
}

/// All valid pointed data on a given abelian group with quadratic-form
/// values in the 2|G|-th roots of unity, over all choices of b0. Candidate
/// forms are generated from values on a generating set and kept when they
/// pass validation.
inline std::vector<PointedDatum> admissible_pointed_data(const GroupTable& g) {
    const int n = g.order;
    const int m = 2 * n;  // every quadratic form on G takes values in mu_{2|G|}
    std::vector<PointedDatum> out;

    // find a minimal generating set greedily
    std::vector<int> gens;
    {
        std::vector<bool> reached(n, false);
        reached[0] = true;
        int covered = 1;
        while (covered < n) {
            int pick = -1;
            for (int a = 1; a < n && pick < 0; ++a)
                if (!reached[a]) pick = a;
            gens.push_back(pick);
            // close under multiplication by pick
            bool grew = true;
            while (grew) {
                grew = false;
                for (int a = 0; a < n; ++a)
                    if (reached[a] && !reached[g.mul(a, pick)]) {
                        reached[g.mul(a, pick)] = true;
                        ++covered;
                        grew = true;
                    }
            }
        }
    }

    // decompose each element over the generators (orders multiply to >= n)
    std::vector<int> gen_order(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        int o = 1, x = gens[i];
        while (x != 0) { x = g.mul(x, gens[i]); ++o; }
        gen_order[i] = o;
    }
    // exponent vectors for every element (first match in mixed radix scan)
    std::vector<std::vector<int>> expo(n);
    {
        std::vector<bool> have(n, false);
        std::vector<int> digits(gens.size(), 0);
        for (;;) {
            int x = 0;
            for (std::size_t i = 0; i < gens.size(); ++i) x = g.mul(x, g.pow(gens[i], digits[i]));
            if (!have[x]) { have[x] = true; expo[x] = digits; }
            std::size_t i = 0;
            while (i < gens.size() && digits[i] == gen_order[i] - 1) digits[i++] = 0;
            if (i == gens.size()) break;
            ++digits[i];
        }
    }

    // q is determined by q(gen_i) and B(gen_i, gen_j) for i < j:
    // q(prod g_i^{x_i}) = prod q(g_i)^{x_i^2} * prod_{i<j} B(g_i,g_j)^{x_i x_j}
    std::vector<int> qg(gens.size(), 0);
    std::vector<std::vector<int>> bg(gens.size(), std::vector<int>(gens.size(), 0));
    std::function<void(std::size_t, std::size_t)> assign_bij = [&](std::size_t i, std::size_t j) {
        if (i >= gens.size()) {
            // build the q table and validate
            PointedDatum p;
            p.group = g;
            p.root_order = m;
            p.q_exp.assign(n, 0);
            for (int a = 0; a < n; ++a) {
                long e = 0;
                for (std::size_t s = 0; s < gens.size(); ++s) {
                    e += static_cast<long>(qg[s]) * expo[a][s] * expo[a][s];
                    for (std::size_t t = s + 1; t < gens.size(); ++t)
                        e += static_cast<long>(bg[s][t]) * expo[a][s] * expo[a][t];
                }
                p.q_exp[a] = static_cast<int>(((e % m) + m) % m);
            }
            for (int b0 = 0; b0 < n; ++b0) {
                p.b0 = b0;
                if (validate_pointed(p).ok()) out.push_back(p);
            }
            return;
        }
        if (j >= gens.size()) { assign_bij(i + 1, i + 2); return; }
        // B(g_i, g_j) must be a root of order dividing gcd of the orders
        int step = m / std::gcd(gen_order[i], gen_order[j]);
        for (int e = 0; e < m; e += step) {
            bg[i][j] = e;
            assign_bij(i, j + 1);
        }
    };
    std::function<void(std::size_t)> assign_q = [&](std::size_t i) {
        if (i >= gens.size()) { assign_bij(0, 1); return; }
        // q(g)^{ord(g)^2} = 1
        for (int e = 0; e < m; ++e) {
            if ((static_cast<long>(e) * gen_order[i] * gen_order[i]) % m != 0) continue;
            qg[i] = e;
            assign_q(i + 1);
        }
    };
    assign_q(0);

    // deduplicate identical q tables reached via different parameters
    std::sort(out.begin(), out.end(), [](const PointedDatum& a, const PointedDatum& b) {
        return std::tie(a.q_exp, a.b0) < std::tie(b.q_exp, b.b0);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const PointedDatum& a, const PointedDatum& b) {
                              return a.q_exp == b.q_exp && a.b0 == b.b0;
                          }),
              out.end());
    return out;
}

} // namespace ansular
