#include "mvc/planar.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "mvc/errors.hpp"
#include "mvc/exact.hpp"
#include "mvc/flow.hpp"

namespace mvc {

Triangulation random_maximal_planar(int n, std::uint64_t seed) {
    if (n < 3) throw GraphError("random_maximal_planar: need n >= 3");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
    // The starting triangle bounds two faces (inside and outside).
    std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 1, 2}};
    for (int v = 3; v < n; ++v) {
        std::uniform_int_distribution<size_t> pick(0, faces.size() - 1);
        size_t f = pick(rng);
        auto [a, b, c] = faces[f];
        faces[f] = {a, b, v};
        faces.push_back({a, c, v});
        faces.push_back({b, c, v});
        edges.push_back({a, v});
        edges.push_back({b, v});
        edges.push_back({c, v});
    }
    for (auto& t : faces) std::sort(t.begin(), t.end());
    return {Graph::build(n, std::move(edges)), std::move(faces)};
}

Graph random_connected_planar(int n, int target_m, std::uint64_t seed) {
    if (n < 3) throw GraphError("random_connected_planar: need n >= 3");
    if (target_m < n - 1 || target_m > 3 * n - 6)
        throw GraphError("random_connected_planar: target_m must lie in [n-1, 3n-6]");
    std::mt19937_64 rng(seed);
    Triangulation tri = random_maximal_planar(n, rng());
    std::vector<Edge> edges = tri.graph.edges();
    while (static_cast<int>(edges.size()) > target_m) {
        std::shuffle(edges.begin(), edges.end(), rng);
        bool removed = false;
        for (size_t i = 0; i < edges.size(); ++i) {
            std::vector<Edge> rest = edges;
            rest.erase(rest.begin() + static_cast<long>(i));
            if (is_connected(Graph::build(n, rest))) {
                edges = std::move(rest);
                removed = true;
                break;
            }
        }
        if (!removed)
            throw InternalInvariantViolation("no removable edge above tree size");
    }
    return Graph::build(n, std::move(edges));
}

namespace {

GraphRecord examine(const Graph& g, std::string name) {
    GraphRecord rec;
    rec.name = std::move(name);
    rec.n = g.vertex_count();
    rec.m = g.edge_count();
    rec.min_degree = g.min_degree();
    rec.kappa = min_vertex_cut(g).size();
    SpecialClass cls = classify_special(g);
    rec.special_class = to_string(cls.tag);
    rec.excluded_class = cls.excluded();
    ExactAnswer ex = exact_min_matching_vertex_cutset(g);
    if (ex.found()) rec.kappa_m = *ex.k;
    return rec;
}

}  // namespace

SuiteReport run_planar_suite(int count, int n_min, int n_max, std::uint64_t seed) {
    if (n_min < 3 || n_max < n_min) throw GraphError("run_planar_suite: bad n range");
    SuiteReport rep;
    rep.description = "planar bound suite (stacked triangulations + edge deletion)";
    rep.seed = seed;
    rep.count = count;
    rep.n_min = n_min;
    rep.n_max = n_max;
    std::mt19937_64 rng(seed);

    auto check = [&](GraphRecord rec, bool maximal) {
        auto fail = [&](const std::string& what) {
            rec.failed_checks.push_back(what);
            rep.violations.push_back(rec.name + ": " + what);
        };
        if (maximal && rec.n >= 5) {
            if (!rec.kappa_m)
                fail("maximal planar with n >= 5 has no matching vertex-cutset");
            else {
                if (*rec.kappa_m < 2) fail("kappa_M < 2 on a maximal planar graph");
                if (*rec.kappa_m > 3) fail("kappa_M > 3");
                if (*rec.kappa_m > rec.min_degree) fail("kappa_M > delta");
                if (*rec.kappa_m == 2) rep.tight_examples.push_back(rec.name + " (kappa_M = 2)");
            }
        }
        if (!rec.excluded_class) {
            if (!rec.kappa_m)
                fail("no matching vertex-cutset outside the excluded classes");
            else if (*rec.kappa_m > 3)
                fail("kappa_M > 3 on a planar graph");
            if (rec.kappa_m && *rec.kappa_m == 3)
                rep.tight_examples.push_back(rec.name + " (kappa_M = 3)");
        }
        rep.records.push_back(std::move(rec));
    };

    // Fixed fixtures, bounds known to be tight.
    {
        GraphRecord ico = examine(make_named("icosahedron"), "icosahedron");
        if (!ico.kappa_m || *ico.kappa_m != 3) {
            ico.failed_checks.push_back("expected kappa_M = 3");
            rep.violations.push_back("icosahedron: expected kappa_M = 3");
        }
        check(std::move(ico), true);

        GraphRecord k5m = examine(make_named("k5_minus"), "k5_minus");
        if (!k5m.kappa_m || *k5m.kappa_m != 2) {
            k5m.failed_checks.push_back("expected kappa_M = 2");
            rep.violations.push_back("k5_minus: expected kappa_M = 2");
        }
        check(std::move(k5m), true);
    }

    for (int i = 0; i < count; ++i) {
        std::uniform_int_distribution<int> size(n_min, n_max);
        int n = size(rng);
        Triangulation tri = random_maximal_planar(n, rng());
        check(examine(tri.graph, "maximal-planar-" + std::to_string(i)), true);
    }

    const int conn_max = std::min(n_max, 10);
    for (int i = 0; i < count; ++i) {
        std::uniform_int_distribution<int> size(n_min, conn_max);
        int n = size(rng);
        std::uniform_int_distribution<int> msize(n - 1, 3 * n - 6);
        Graph g = random_connected_planar(n, msize(rng), rng());
        check(examine(g, "connected-planar-" + std::to_string(i)), false);
    }

    return rep;
}

}  // namespace mvc
