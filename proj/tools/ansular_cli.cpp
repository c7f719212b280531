// Command-line front end: dataset validation, dimension queries, torus
// representations, graph/dihedral enumeration and oracle cross-checks.
//
// Exit codes: 0 all checks pass, 1 mathematical check failure, 2 input
// error, 3 budget exceeded.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ansular/blocks.hpp"
#include "ansular/corpus.hpp"
#include "ansular/cyclic.hpp"
#include "ansular/dihedral_checks.hpp"
#include "ansular/graph_enum.hpp"
#include "ansular/gv_data.hpp"
#include "ansular/torus_rep.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct Dataset {
    std::string name;
    bool pointed = false;
    ansular::FusionDatum fusion;
    std::optional<ansular::PointedDatum> pointed_datum;
};

// A dataset reference is either a path to a JSON file or the name of a
// bundled corpus entry.
Dataset load_dataset(const std::string& ref) {
    std::ifstream in(ref);
    if (!in) {
        const ansular::CorpusEntry* e = ansular::find_corpus(ref);
        if (!e) throw std::invalid_argument("no such dataset file or corpus entry: " + ref);
        Dataset d;
        d.name = e->name;
        d.pointed = e->pointed;
        d.fusion = e->fusion;
        d.pointed_datum = e->pointed_datum;
        return d;
    }
    nlohmann::json j = nlohmann::json::parse(in);
    Dataset d;
    d.name = ref;
    if (j.contains("group")) {
        d.pointed = true;
        d.pointed_datum = ansular::PointedDatum::from_json(j);
        // conversion requires validity; defer to the caller when only
        // validation is wanted
    } else {
        d.fusion = ansular::FusionDatum::from_json(j);
    }
    return d;
}

std::vector<int> parse_labels(const std::string& csv) {
    std::vector<int> out;
    if (csv.empty()) return out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

std::vector<std::string> parse_names(const std::string& csv) {
    std::vector<std::string> out;
    if (csv.empty()) return out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    return out;
}

std::string scalar_str(const ansular::Cyclotomic& c) {
    if (c.is_zero()) return "0";
    if (auto e = c.as_root_exponent()) {
        if (*e == 0) return "1";
        return "z" + std::to_string(c.order()) + "^" + std::to_string(*e);
    }
    return c.str();
}

nlohmann::json scalar_json(const ansular::Cyclotomic& c) {
    if (c.is_zero()) return {{"order", 1}, {"exponent", nullptr}};
    if (auto e = c.as_root_exponent()) return {{"order", c.order()}, {"exponent", *e}};
    throw std::logic_error("non-monomial scalar in torus matrix");
}

void print_matrix(const std::string& name, const ansular::CycMatrix& m) {
    std::cout << name << ":\n";
    std::size_t width = 1;
    for (const auto& row : m)
        for (const auto& c : row) width = std::max(width, scalar_str(c).size());
    for (const auto& row : m) {
        std::cout << " ";
        for (const auto& c : row)
            std::cout << " " << std::setw(static_cast<int>(width)) << scalar_str(c);
        std::cout << "\n";
    }
}

// Morphism spec: either a generator word like "d0:2.t2.r" (tokens joined by
// '.', composed left to right) or a value list "src>dst:v0,v1,..." with an
// optional trailing "!" for the flip.
ansular::DihedralMorphism parse_morphism(const std::string& spec) {
    using namespace ansular;
    auto gt = spec.find('>');
    if (gt != std::string::npos && spec.find(':') != std::string::npos) {
        std::string body = spec;
        bool flip = false;
        if (!body.empty() && body.back() == '!') { flip = true; body.pop_back(); }
        int src = std::stoi(body.substr(0, gt));
        auto colon = body.find(':', gt);
        int dst = std::stoi(body.substr(gt + 1, colon - gt - 1));
        std::vector<std::int64_t> vals;
        for (int v : parse_labels(body.substr(colon + 1))) vals.push_back(v);
        return {make_cyclic(src, dst, vals), flip};
    }
    std::optional<DihedralMorphism> acc;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, '.')) {
        DihedralMorphism step;
        if (tok == "r") {
            if (!acc) throw std::invalid_argument("word may not start with a bare flip; use rN");
            step = {cyclic_identity(acc->base.dst), true};
        } else if (tok.size() >= 2 && tok[0] == 'r') {
            step = {cyclic_identity(std::stoi(tok.substr(1))), true};
        } else if (tok.size() >= 2 && tok[0] == 't') {
            step = {tau(std::stoi(tok.substr(1))), false};
        } else if (tok.size() >= 4 && (tok[0] == 'd' || tok[0] == 's')) {
            auto colon = tok.find(':');
            if (colon == std::string::npos) throw std::invalid_argument("bad token: " + tok);
            int idx = std::stoi(tok.substr(1, colon - 1));
            int n = std::stoi(tok.substr(colon + 1));
            step = {tok[0] == 'd' ? delta(idx, n) : sigma(idx, n), false};
        } else {
            throw std::invalid_argument("bad token: " + tok);
        }
        acc = acc ? compose(*acc, step) : step;
    }
    if (!acc) throw std::invalid_argument("empty morphism spec");
    return *acc;
}

int cmd_validate(const std::string& dataset, bool as_json) {
    Dataset d = load_dataset(dataset);
    ansular::ValidationReport rep;
    if (d.pointed) {
        rep = ansular::validate_pointed(*d.pointed_datum);
        if (rep.ok()) {
            d.fusion = ansular::pointed_to_fusion(*d.pointed_datum);
            auto frep = ansular::validate_fusion(d.fusion);
            for (const auto& f : frep.failures) rep.failures.push_back(f);
        }
    } else {
        rep = ansular::validate_fusion(d.fusion);
    }
    if (as_json) {
        nlohmann::json j;
        j["dataset"] = d.name;
        j["valid"] = rep.ok();
        j["failures"] = nlohmann::json::array();
        for (const auto& f : rep.failures)
            j["failures"].push_back({{"check", f.check}, {"witness", f.witness}});
        std::cout << j.dump(2) << "\n";
    } else if (rep.ok()) {
        std::cout << d.name << ": valid\n";
    } else {
        std::cout << d.name << ": INVALID\n";
        for (const auto& f : rep.failures)
            std::cout << "  " << f.check << "  witness " << f.witness << "\n";
    }
    return rep.ok() ? kExitPass : kExitMathFail;
}

int cmd_dims(const std::string& dataset, int genus, const std::string& labels_csv,
             const std::string& graph_file, std::uint64_t budget, bool as_json) {
    Dataset d = load_dataset(dataset);
    if (d.pointed) d.fusion = ansular::pointed_to_fusion(*d.pointed_datum);
    ansular::BlockResult res;
    if (!graph_file.empty()) {
        std::ifstream in(graph_file);
        if (!in) throw std::invalid_argument("cannot open graph file: " + graph_file);
        ansular::Graph gamma = ansular::Graph::from_json(nlohmann::json::parse(in));
        auto labels = parse_labels(labels_csv);
        auto names = gamma.leg_labels();
        if (labels.size() != names.size())
            throw std::invalid_argument("--labels must list one label per graph leg (sorted)");
        std::map<std::string, int> leg_map;
        for (std::size_t i = 0; i < names.size(); ++i) leg_map[names[i]] = labels[i];
        res = ansular::graph_glue_dim(d.fusion, gamma, leg_map, budget);
    } else {
        res = ansular::handlebody_dim(d.fusion, {genus, parse_labels(labels_csv)}, budget);
    }
    if (as_json) {
        nlohmann::json j;
        j["dataset"] = d.name;
        j["genus"] = res.signature.genus;
        j["labels"] = res.signature.labels;
        j["dimension"] = res.dimension;
        j["method"] = res.method;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "dimension " << res.dimension << "  (genus " << res.signature.genus
                  << ", method " << res.method << ")\n";
    }
    return kExitPass;
}

int cmd_torus_rep(const std::string& dataset, bool check, bool as_json) {
    Dataset d = load_dataset(dataset);
    if (!d.pointed)
        throw std::invalid_argument("torus-rep requires a pointed dataset");
    const auto& p = *d.pointed_datum;
    auto rep = ansular::validate_pointed(p);
    if (!rep.ok()) {
        std::cout << d.name << ": INVALID (" << rep.failures[0].check << ")\n";
        return kExitMathFail;
    }
    auto t = ansular::t_matrix(p);
    auto r = ansular::r_matrix(p);
    if (as_json) {
        nlohmann::json j;
        j["dataset"] = d.name;
        j["basis"] = ansular::torus_block_basis(p);
        auto mat = [](const ansular::CycMatrix& m) {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& row : m) {
                nlohmann::json r2 = nlohmann::json::array();
                for (const auto& c : row) r2.push_back(scalar_json(c));
                rows.push_back(r2);
            }
            return rows;
        };
        j["T"] = mat(t);
        j["R"] = mat(r);
        if (check) {
            auto c = ansular::check_torus_rep(p);
            j["checks"] = {{"t_diagonal_balancing", c.t_diagonal_balancing},
                           {"commute", c.commute},
                           {"r_squared_identity", c.r_squared_identity}};
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << d.name << "  (basis: group elements 0.." << p.group.order - 1 << ")\n";
        print_matrix("T", t);
        print_matrix("R", r);
    }
    if (check) {
        auto c = ansular::check_torus_rep(p);
        if (!as_json)
            std::cout << "T diagonal = q: " << (c.t_diagonal_balancing ? "pass" : "FAIL")
                      << "\nTR = RT:        " << (c.commute ? "pass" : "FAIL")
                      << "\nR^2 = id:       " << (c.r_squared_identity ? "pass" : "FAIL") << "\n";
        if (!c.all()) return kExitMathFail;
    }
    return kExitPass;
}

int cmd_graphs(int genus, const std::string& legs_csv, int max_vertices, bool as_json) {
    auto legs = parse_names(legs_csv);
    auto found = ansular::enumerate_reduced(legs, genus, max_vertices);
    if (as_json) {
        nlohmann::json j;
        j["genus"] = genus;
        j["legs"] = legs;
        j["max_vertices"] = max_vertices;
        j["count"] = found.size();
        j["graphs"] = nlohmann::json::array();
        for (const auto& e : found) {
            nlohmann::json g = e.graph.to_json();
            g["automorphisms"] = ansular::automorphism_count(e.graph);
            j["graphs"].push_back(g);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << found.size() << " reduced graph(s), genus " << genus << ", legs {"
                  << legs_csv << "}, <= " << max_vertices << " vertices\n";
        for (const auto& e : found)
            std::cout << "  vertices " << e.graph.vertex_count() << "  edges "
                      << e.graph.internal_edges().size() << "  |Aut| "
                      << ansular::automorphism_count(e.graph) << "  "
                      << e.graph.to_json().dump() << "\n";
    }
    return kExitPass;
}

int cmd_dihedral(int max_n, bool check, const std::string& lhs, const std::string& rhs,
                 bool as_json) {
    if (!lhs.empty() || !rhs.empty()) {
        if (lhs.empty() || rhs.empty())
            throw std::invalid_argument("dihedral check needs both --lhs and --rhs");
        auto f = parse_morphism(lhs), g = parse_morphism(rhs);
        bool equal = f == g;
        auto show = [](const ansular::DihedralMorphism& m) {
            return m.base.str() + (m.flip ? "!" : "");
        };
        if (as_json) {
            nlohmann::json j{{"lhs", show(f)}, {"rhs", show(g)}, {"equal", equal}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << show(f) << (equal ? " == " : " != ") << show(g) << "\n";
        }
        return equal ? kExitPass : kExitMathFail;
    }

    nlohmann::json j;
    bool all_ok = true;
    if (check) {
        auto rel = ansular::cyclic_relation_suite(max_n);
        int psi_n = std::min(max_n, 3);
        auto psi = ansular::psi_equivalence_suite(psi_n);
        auto fact = ansular::dihedral_factorization_suite(psi_n);
        all_ok = rel.ok() && psi.ok() && fact.ok();
        auto emit = [&](const std::string& name, const ansular::ValidationReport& r) {
            if (as_json) {
                j["checks"][name] = r.ok();
            } else {
                std::cout << name << ": " << (r.ok() ? "pass" : "FAIL") << "\n";
                for (const auto& f : r.failures)
                    std::cout << "  " << f.check << "  " << f.witness << "\n";
            }
        };
        emit("relations", rel);
        emit("psi_equivalence", psi);
        emit("factorization", fact);
    }
    nlohmann::json homs = nlohmann::json::array();
    for (int m = 0; m <= max_n; ++m)
        for (int n = m; n <= max_n; ++n) {
            auto cnt = ansular::enumerate_dihedral(m, n).size();
            if (as_json)
                homs.push_back({{"src", m}, {"dst", n}, {"count", cnt}});
            else
                std::cout << "|Hom([" << m << "],[" << n << "])| = " << cnt << "\n";
            std::uint64_t aut = ansular::dihedral_automorphism_order(n);
            if (m == n && aut != 2ull * (n + 1)) all_ok = false;
        }
    if (as_json) {
        j["homs"] = homs;
        std::cout << j.dump(2) << "\n";
    }
    return all_ok ? kExitPass : kExitMathFail;
}

int cmd_oracle_compare(const std::string& group, int max_genus, bool as_json) {
    auto gt = ansular::named_group(group);
    if (!gt) throw std::invalid_argument("unknown group: " + group);
    ansular::FusionDatum fusion;
    if (group == "s3") {
        fusion = ansular::rep_s3_fusion();
    } else {
        // group algebra of Z/n: pointed datum with trivial form
        ansular::PointedDatum p;
        p.group = *gt;
        p.root_order = 1;
        p.q_exp.assign(gt->order, 0);
        p.b0 = 0;
        fusion = ansular::pointed_to_fusion(p);
    }
    bool all_pass = true;
    nlohmann::json rows = nlohmann::json::array();
    if (!as_json) std::cout << "  g  fusion  orbit  status\n";
    for (int g = 0; g <= max_genus; ++g) {
        std::uint64_t f = ansular::handlebody_dim(fusion, {g, {}}).dimension;
        std::uint64_t o = ansular::orbit_oracle(*gt, g);
        bool pass = f == o;
        all_pass = all_pass && pass;
        if (as_json)
            rows.push_back({{"genus", g}, {"fusion", f}, {"orbit", o}, {"pass", pass}});
        else
            std::cout << "  " << g << "  " << std::setw(6) << f << "  " << std::setw(5) << o
                      << "  " << (pass ? "pass" : "FAIL") << "\n";
    }
    if (as_json) {
        nlohmann::json j{{"group", group}, {"rows", rows}, {"pass", all_pass}};
        std::cout << j.dump(2) << "\n";
    }
    return all_pass ? kExitPass : kExitMathFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ansular: handlebody block dimensions and genus-one actions "
                 "from skeletal ribbon Grothendieck-Verdier data"};
    app.require_subcommand(1);
    bool as_json = false;

    std::string dataset, labels_csv, graph_file, lhs, rhs, group = "s3";
    int genus = 0, max_n = 5, max_vertices = 6, max_genus = 3;
    std::uint64_t budget = 10'000'000;
    bool check = false;

    auto* validate = app.add_subcommand("validate", "validate a dataset");
    validate->add_option("--dataset", dataset, "dataset file or corpus name")->required();

    auto* dims = app.add_subcommand("dims", "handlebody block dimension");
    dims->add_option("--dataset", dataset, "dataset file or corpus name")->required();
    dims->add_option("-g", genus, "genus");
    dims->add_option("--labels", labels_csv, "comma-separated boundary labels");
    dims->add_option("--graph", graph_file, "glue along this graph (JSON) instead");
    dims->add_option("--budget", budget, "term budget for the dimension sum");

    auto* torus = app.add_subcommand("torus-rep", "torus block T and R matrices");
    torus->add_option("--dataset", dataset, "pointed dataset file or corpus name")->required();
    torus->add_flag("--check", check, "verify the mapping-class relations");

    auto* graphs = app.add_subcommand("graphs", "enumerate connected reduced graphs");
    graphs->add_option("-g", genus, "genus (first Betti number)");
    graphs->add_option("--labels", labels_csv, "comma-separated leg names");
    graphs->add_option("--max-n", max_vertices, "maximum number of vertices");

    auto* dihedral = app.add_subcommand("dihedral", "dihedral category computations");
    dihedral->add_option("--max-n", max_n, "largest object [n]");
    dihedral->add_flag("--check", check, "run the relation and equivalence suites");
    dihedral->add_option("--lhs", lhs, "morphism (generator word or src>dst:v0,v1,...)");
    dihedral->add_option("--rhs", rhs, "morphism to compare against");

    auto* oracle = app.add_subcommand("oracle", "independent cross-checking oracles");
    auto* compare = oracle->add_subcommand("compare", "fusion vs conjugation-orbit counts");
    compare->add_option("--group", group, "group name (s3, z2, z3, ...)");
    compare->add_option("--max-genus", max_genus, "largest genus to compare");
    oracle->require_subcommand(1);

    for (CLI::App* sub : {validate, dims, torus, graphs, dihedral, compare})
        sub->add_flag("--json", as_json, "machine-readable JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInput;
    }

    try {
        if (validate->parsed()) return cmd_validate(dataset, as_json);
        if (dims->parsed()) return cmd_dims(dataset, genus, labels_csv, graph_file, budget, as_json);
        if (torus->parsed()) return cmd_torus_rep(dataset, check, as_json);
        if (graphs->parsed()) return cmd_graphs(genus, labels_csv, max_vertices, as_json);
        if (dihedral->parsed()) return cmd_dihedral(max_n, check, lhs, rhs, as_json);
        if (compare->parsed()) return cmd_oracle_compare(group, max_genus, as_json);
    } catch (const std::length_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFail;
    }
    return kExitInput;
}
