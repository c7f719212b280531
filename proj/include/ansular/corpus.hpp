#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ansular/gv_data.hpp"

namespace ansular {

/// A bundled dataset: either a fusion datum or a pointed datum.
struct CorpusEntry {
    std::string name;
    bool pointed = false;
    FusionDatum fusion;           // the fusion form (derived for pointed entries)
    std::optional<PointedDatum> pointed_datum;

    nlohmann::json to_json() const {
        return pointed ? pointed_datum->to_json() : fusion.to_json();
    }
};

inline GroupTable s3_table() {
    // permutations of {0,1,2} in one-line notation, identity first:
    // 0:(012) id, 1:(021) swap12, 2:(102) swap01, 3:(120) 3-cycle,
    // 4:(201) 3-cycle, 5:(210) swap02 — product = composition g(h(x))
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                             {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    GroupTable g;
    g.order = 6;
    g.table.resize(36);
    auto index_of = [&](const int* p) {
        for (int i = 0; i < 6; ++i)
            if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
        return -1;
    };
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            int comp[3];
            for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
            g.table[static_cast<std::size_t>(a) * 6 + b] = index_of(comp);
        }
    return g;
}

/// Rep(S3) fusion rules: labels 0 = trivial, 1 = sign, 2 = standard.
inline FusionDatum rep_s3_fusion() {
    FusionDatum d;
    d.rank = 3;
    d.N.assign(27, 0);
    auto set = [&](int a, int b, int c, int v) { d.N[(a * 3 + b) * 3 + c] = v; };
    for (int a = 0; a < 3; ++a) { set(0, a, a, 1); set(a, 0, a, 1); }
    set(1, 1, 0, 1);
    set(1, 2, 2, 1);
    set(2, 1, 2, 1);
    set(2, 2, 0, 1);
    set(2, 2, 1, 1);
    set(2, 2, 2, 1);
    d.bar = {0, 1, 2};
    d.kappa = 0;
    return d;
}

inline std::vector<CorpusEntry> corpus() {
    std::vector<CorpusEntry> out;

    {
        CorpusEntry e;
        e.name = "trivial";
        e.fusion.rank = 1;
        e.fusion.N = {1};
        e.fusion.bar = {0};
        e.fusion.kappa = 0;
        out.push_back(e);
    }

    auto add_pointed = [&](const std::string& name, PointedDatum p) {
        CorpusEntry e;
        e.name = name;
        e.pointed = true;
        e.pointed_datum = p;
        e.fusion = pointed_to_fusion(p);
        out.push_back(e);
    };

    {
        PointedDatum p;
        p.group = cyclic_group(2);
        p.root_order = 1;
        p.q_exp = {0, 0};
        p.b0 = 0;
        add_pointed("z2_trivial", p);
    }
    {
        // the semion: q(g) = i
        PointedDatum p;
        p.group = cyclic_group(2);
        p.root_order = 4;
        p.q_exp = {0, 1};
        p.b0 = 0;
        add_pointed("semion", p);
    }
    {
        // Z/3 with b0 = g, so a0 = g^{-2} = g != 1: not an r-category
        PointedDatum p;
        p.group = cyclic_group(3);
        p.root_order = 1;
        p.q_exp = {0, 0, 0};
        p.b0 = 1;
        add_pointed("z3_pointed", p);
    }
    {
        // Z/3 with q(x) = zeta_3^{x^2}
        PointedDatum p;
        p.group = cyclic_group(3);
        p.root_order = 3;
        p.q_exp = {0, 1, 1};
        p.b0 = 0;
        add_pointed("z3_quadratic", p);
    }
    {
        // Z/4 with q(x) = i^{x^2} and a0 = 2
        PointedDatum p;
        p.group = cyclic_group(4);
        p.root_order = 4;
        p.q_exp = {0, 1, 0, 1};
        p.b0 = 1;
        add_pointed("z4_pointed", p);
    }

    {
        CorpusEntry e;
        e.name = "rep_s3";
        e.fusion = rep_s3_fusion();
        out.push_back(e);
    }

    return out;
}

inline const CorpusEntry* find_corpus(const std::string& name) {
    static const std::vector<CorpusEntry> all = corpus();
    for (const auto& e : all)
        if (e.name == name) return &e;
    return nullptr;
}

/// Named group tables for the orbit oracle.
inline std::optional<GroupTable> named_group(const std::string& name) {
    if (name == "s3") return s3_table();
    if (name.size() >= 2 && name[0] == 'z') {
        try {
            int n = std::stoi(name.substr(1));
            if (n >= 1 && n <= 64) return cyclic_group(n);
        } catch (const std::exception&) {}
    }
    return std::nullopt;
}

} // namespace ansular
