// mvcut: matching vertex-cutset toolkit command-line front end.
//
// One machine-readable JSON document per invocation on stdout; human
// commentary on stderr. Exit codes: 0 success-with-cutset, 1 input error,
// 2 NoSolution, 3 verification-negative.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mvc/approx.hpp"
#include "mvc/exact.hpp"
#include "mvc/flow.hpp"
#include "mvc/graph.hpp"
#include "mvc/io.hpp"
#include "mvc/planar.hpp"
#include "mvc/reduction.hpp"

using json = nlohmann::json;
using namespace mvc;

namespace {

struct InputOpts {
    std::string path;  // empty or "-" means stdin
    std::string format = "edge";
    std::string named;
    int p1 = 0;
    int p2 = 0;
};

void add_input_opts(CLI::App* cmd, InputOpts& in) {
    cmd->add_option("input", in.path, "graph file (defaults to stdin)");
    cmd->add_option("--format", in.format, "edge (default) or dimacs")
        ->check(CLI::IsMember({"edge", "dimacs"}));
    cmd->add_option("--named", in.named,
                    "named graph: complete, complete_bipartite, cycle, path, star, grid, "
                    "icosahedron, k5_minus");
    cmd->add_option("-n", in.p1, "size parameter for --named");
    cmd->add_option("--n2", in.p2, "second size parameter (bipartite side / grid cols)");
}

LabeledGraph load(const InputOpts& in) {
    if (!in.named.empty()) {
        Graph g = make_named(in.named, in.p1, in.p2);
        return {g, identity_labels(g.vertex_count())};
    }
    if (in.path.empty() || in.path == "-") return read_graph_stream(std::cin, in.format);
    return read_graph_file(in.path, in.format);
}

json input_summary(const LabeledGraph& lg) {
    const Graph& g = lg.graph;
    json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["delta"] = g.vertex_count() > 0 ? g.min_degree() : 0;
    j["class"] = is_connected(g) ? to_string(classify_special(g).tag) : "disconnected";
    return j;
}

json matching_json(const Matching& m, const std::vector<std::string>& labels) {
    json arr = json::array();
    for (auto [u, v] : m.edges()) arr.push_back({labels[u], labels[v]});
    return arr;
}

json components_json(const std::vector<std::vector<int>>& comps,
                     const std::vector<std::string>& labels) {
    json arr = json::array();
    for (const auto& c : comps) {
        json comp = json::array();
        for (int v : c) comp.push_back(labels[v]);
        arr.push_back(comp);
    }
    return arr;
}

int emit(const std::string& command, json doc, int status) {
    doc["command"] = command;
    doc["status"] = status;
    std::cout << doc.dump(2) << "\n";
    return status;
}

int fail(const std::string& command, const std::string& message, int status) {
    std::cerr << "error: " << message << "\n";
    return emit(command, json{{"error", message}}, status);
}

Matching parse_matching(const std::string& spec, const LabeledGraph& lg) {
    std::vector<Edge> edges;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 == item.size())
            throw GraphError("bad matching edge `" + item + "` (expected u-v)");
        int u = lg.require(item.substr(0, dash));
        int v = lg.require(item.substr(dash + 1));
        edges.push_back(make_edge(u, v));
    }
    if (edges.empty()) throw GraphError("empty matching spec");
    return Matching(std::move(edges));
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw GraphError("cannot write " + path);
    out << text;
}

int run_approx(const InputOpts& in) {
    LabeledGraph lg;
    try {
        lg = load(in);
        if (!is_connected(lg.graph)) return fail("approx", "input graph is disconnected", 1);
    } catch (const GraphError& e) {
        return fail("approx", e.what(), 1);
    }
    json doc;
    doc["input"] = input_summary(lg);
    auto res = approx_min_matching_vertex_cutset(lg.graph);
    if (!res) {
        doc["result"] = {{"no_solution", true},
                         {"class", to_string(classify_special(lg.graph).tag)}};
        std::cerr << "no matching vertex-cutset exists (excluded graph class)\n";
        return emit("approx", doc, 2);
    }
    doc["result"] = {{"matching", matching_json(res->matching, lg.labels)},
                     {"size", res->matching.size()},
                     {"kappa", res->kappa},
                     {"verdict", to_string(res->certificate.verdict)},
                     {"case_trace", res->case_trace},
                     {"components_after",
                      components_json(res->certificate.components_after, lg.labels)}};
    std::cerr << "matching vertex-cutset of size " << res->matching.size()
              << " (kappa = " << res->kappa << ", " << res->case_trace << ")\n";
    return emit("approx", doc, 0);
}

int run_exact(const InputOpts& in, std::uint64_t budget) {
    LabeledGraph lg;
    try {
        lg = load(in);
        if (!is_connected(lg.graph)) return fail("exact", "input graph is disconnected", 1);
    } catch (const GraphError& e) {
        return fail("exact", e.what(), 1);
    }
    json doc;
    doc["input"] = input_summary(lg);
    try {
        ExactAnswer ans = exact_min_matching_vertex_cutset(lg.graph, budget);
        if (!ans.found()) {
            doc["result"] = {{"no_solution", true}};
            std::cerr << "no matching vertex-cutset exists\n";
            return emit("exact", doc, 2);
        }
        CutsetCertificate cert = check_cutset(lg.graph, ans.witness);
        doc["result"] = {{"k", *ans.k},
                         {"witness", matching_json(ans.witness, lg.labels)},
                         {"verdict", to_string(cert.verdict)},
                         {"components_after", components_json(cert.components_after, lg.labels)}};
        std::cerr << "kappa_M = " << *ans.k << "\n";
        return emit("exact", doc, 0);
    } catch (const BudgetExceeded& e) {
        return fail("exact", e.what(), 1);
    }
}

int run_verify(const InputOpts& in, const std::string& matching_spec) {
    LabeledGraph lg;
    Matching m;
    try {
        lg = load(in);
        m = parse_matching(matching_spec, lg);
        if (!matching_in_graph(lg.graph, m))
            throw GraphError("matching uses edges absent from the graph");
    } catch (const GraphError& e) {
        return fail("verify", e.what(), 1);
    }
    json doc;
    doc["input"] = input_summary(lg);
    CutsetCertificate cert = check_cutset(lg.graph, m);
    doc["result"] = {{"matching", matching_json(m, lg.labels)},
                     {"verdict", to_string(cert.verdict)},
                     {"components_after", components_json(cert.components_after, lg.labels)}};
    std::cerr << "verdict: " << to_string(cert.verdict) << "\n";
    return emit("verify", doc, cert.is_cutset() ? 0 : 3);
}

int run_reduce(const InputOpts& in, const std::string& left, const std::string& right, int k,
               bool check, const std::string& out_path) {
    LabeledGraph lg;
    std::vector<int> X, Y;
    try {
        lg = load(in);
        auto parse_side = [&](const std::string& s, std::vector<int>& side) {
            std::stringstream ss(s);
            std::string item;
            while (std::getline(ss, item, ',')) side.push_back(lg.require(item));
        };
        if (!left.empty() || !right.empty()) {
            parse_side(left, X);
            parse_side(right, Y);
        } else {
            // Derive the bipartition by 2-coloring.
            std::vector<int> color(lg.graph.vertex_count(), -1);
            for (int s = 0; s < lg.graph.vertex_count(); ++s) {
                if (color[s] >= 0) continue;
                color[s] = 0;
                std::vector<int> stack{s};
                while (!stack.empty()) {
                    int u = stack.back();
                    stack.pop_back();
                    for (int w : lg.graph.neighbors(u)) {
                        if (color[w] < 0) {
                            color[w] = 1 - color[u];
                            stack.push_back(w);
                        } else if (color[w] == color[u]) {
                            throw GraphError("input graph is not bipartite");
                        }
                    }
                }
            }
            for (int v = 0; v < lg.graph.vertex_count(); ++v)
                (color[v] == 0 ? X : Y).push_back(v);
        }
        ReductionInstance inst = build_reduction(lg.graph, X, Y, k);
        json doc;
        doc["input"] = input_summary(lg);
        doc["result"] = {{"gadget_n", inst.gadget.vertex_count()},
                         {"gadget_m", inst.gadget.edge_count()},
                         {"k", inst.budget}};
        std::string text = serialize_reduction(inst);
        write_output(out_path, text);
        if (out_path.empty()) doc["result"]["gadget"] = text;
        if (check) {
            EquivalenceReport rep = verify_equivalence(lg.graph, X, Y, k);
            json rows = json::array();
            for (const auto& r : rep.rows)
                rows.push_back({{"k", r.k},
                                {"ieds_at_most_k", r.ieds_at_most_k},
                                {"gadget_cutset_at_most_k", r.gadget_cutset_at_most_k},
                                {"agree", r.agree()}});
            doc["result"]["equivalence"] = {{"ieds_size", rep.ieds_size},
                                            {"gadget_class", to_string(rep.gadget_class.tag)},
                                            {"rows", rows},
                                            {"all_agree", rep.all_agree()}};
            std::cerr << "equivalence " << (rep.all_agree() ? "holds" : "FAILS")
                      << " for k = 1.." << rep.rows.size() << "\n";
            return emit("reduce", doc, rep.all_agree() ? 0 : 3);
        }
        return emit("reduce", doc, 0);
    } catch (const GraphError& e) {
        return fail("reduce", e.what(), 1);
    } catch (const BudgetExceeded& e) {
        return fail("reduce", e.what(), 1);
    }
}

int run_planar_suite(int count, int n_min, int n_max, std::uint64_t seed,
                     const std::string& out_path) {
    json doc;
    try {
        SuiteReport rep = mvc::run_planar_suite(count, n_min, n_max, seed);
        json records = json::array();
        for (const auto& r : rep.records) {
            json rec = {{"name", r.name},         {"n", r.n},
                        {"m", r.m},               {"delta", r.min_degree},
                        {"kappa", r.kappa},       {"class", r.special_class},
                        {"excluded", r.excluded_class}};
            if (r.kappa_m)
                rec["kappa_m"] = *r.kappa_m;
            else
                rec["kappa_m"] = nullptr;
            rec["failed_checks"] = r.failed_checks;
            records.push_back(rec);
        }
        doc["result"] = {{"description", rep.description},
                         {"seed", rep.seed},
                         {"count", rep.count},
                         {"n_min", rep.n_min},
                         {"n_max", rep.n_max},
                         {"records", records},
                         {"violations", rep.violations},
                         {"tight_examples", rep.tight_examples},
                         {"passed", rep.passed()}};
        write_output(out_path, doc.dump(2) + "\n");
        std::cerr << rep.records.size() << " graphs checked, " << rep.violations.size()
                  << " violations, " << rep.tight_examples.size() << " tight examples\n";
        return emit("planar-suite", doc, rep.passed() ? 0 : 3);
    } catch (const GraphError& e) {
        return fail("planar-suite", e.what(), 1);
    }
}

int run_gen(const InputOpts& named, bool random_gnp, bool random_planar, int n, double p,
            int target_m, std::uint64_t seed, const std::string& out_path) {
    try {
        Graph g;
        if (!named.named.empty()) {
            g = make_named(named.named, named.p1, named.p2);
        } else if (random_gnp) {
            g = random_connected_graph(n, p, seed);
        } else if (random_planar) {
            if (target_m < 0)
                g = random_maximal_planar(n, seed).graph;
            else
                g = random_connected_planar(n, target_m, seed);
        } else {
            throw GraphError("gen: need --named, --random, or --random-planar");
        }
        std::ostringstream text;
        write_edge_list(text, g);
        write_output(out_path, text.str());
        if (out_path.empty()) std::cout << text.str();
        std::cerr << "generated graph: n = " << g.vertex_count() << ", m = " << g.edge_count()
                  << "\n";
        return 0;
    } catch (const GraphError& e) {
        return fail("gen", e.what(), 1);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matching vertex-cutset toolkit"};
    app.require_subcommand(1);

    InputOpts approx_in, exact_in, verify_in, reduce_in, gen_in;
    std::uint64_t budget = kDefaultEnumerationBudget;
    std::string matching_spec, left, right, out_path;
    int k = 1;
    bool check = false;
    int count = 50, n_min = 5, n_max = 10;
    std::uint64_t seed = 1;
    bool random_gnp = false, random_planar = false;
    int gen_n = 8, gen_m = -1;
    double gen_p = 0.3;

    auto* c_approx = app.add_subcommand("approx", "2-approximation for a minimum cutset");
    add_input_opts(c_approx, approx_in);

    auto* c_exact = app.add_subcommand("exact", "exact minimum matching vertex-cutset");
    add_input_opts(c_exact, exact_in);
    c_exact->add_option("--budget", budget, "enumeration cap");

    auto* c_verify = app.add_subcommand("verify", "check a candidate matching vertex-cutset");
    add_input_opts(c_verify, verify_in);
    c_verify->add_option("--matching", matching_spec, "edges as u-v,u-v,...")->required();

    auto* c_reduce = app.add_subcommand("reduce", "build the hardness gadget");
    add_input_opts(c_reduce, reduce_in);
    c_reduce->add_option("--left", left, "comma-separated X vertices (default: 2-coloring)");
    c_reduce->add_option("--right", right, "comma-separated Y vertices");
    c_reduce->add_option("-k", k, "budget, 1..min(|X|,|Y|)");
    c_reduce->add_flag("--check", check, "verify the per-k equivalence with the oracles");
    c_reduce->add_option("-o,--output", out_path, "write the gadget here");

    auto* c_suite = app.add_subcommand("planar-suite", "empirical planar bound checks");
    c_suite->add_option("--count", count, "graphs per corpus");
    c_suite->add_option("--n-min", n_min, "smallest n");
    c_suite->add_option("--n-max", n_max, "largest n");
    c_suite->add_option("--seed", seed, "corpus seed");
    c_suite->add_option("-o,--output", out_path, "write the report here");

    auto* c_gen = app.add_subcommand("gen", "emit a graph file");
    add_input_opts(c_gen, gen_in);
    c_gen->add_flag("--random", random_gnp, "random connected G(n,p)");
    c_gen->add_flag("--random-planar", random_planar, "random planar (triangulation)");
    c_gen->add_option("--gen-n", gen_n, "vertex count for --random/--random-planar");
    c_gen->add_option("-p", gen_p, "edge probability for --random");
    c_gen->add_option("-m", gen_m, "edge target for --random-planar (default: maximal)");
    c_gen->add_option("--seed", seed, "generator seed");
    c_gen->add_option("-o,--output", out_path, "write the graph here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_approx->parsed()) return run_approx(approx_in);
        if (c_exact->parsed()) return run_exact(exact_in, budget);
        if (c_verify->parsed()) return run_verify(verify_in, matching_spec);
        if (c_reduce->parsed()) return run_reduce(reduce_in, left, right, k, check, out_path);
        if (c_suite->parsed()) return run_planar_suite(count, n_min, n_max, seed, out_path);
        if (c_gen->parsed()) {
            int n = gen_in.p1 > 0 ? gen_in.p1 : gen_n;
            return run_gen(gen_in, random_gnp, random_planar, n, gen_p, gen_m, seed, out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
