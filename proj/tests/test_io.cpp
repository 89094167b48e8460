#include <doctest.h>

#include <sstream>

#include "mvc/io.hpp"

using namespace mvc;

TEST_CASE("edge list round trip") {
    Graph g = make_named("grid", 2, 3);
    std::stringstream buf;
    write_edge_list(buf, g);
    LabeledGraph back = read_edge_list(buf);
    CHECK(back.graph.edges() == g.edges());
    CHECK(back.labels[4] == "4");
}

TEST_CASE("edge list with arbitrary labels") {
    std::istringstream in("3 2\na b\nb c\n");
    LabeledGraph lg = read_edge_list(in);
    CHECK(lg.graph.vertex_count() == 3);
    CHECK(lg.graph.has_edge(lg.require("a"), lg.require("b")));
    CHECK(lg.graph.has_edge(lg.require("b"), lg.require("c")));
    CHECK_THROWS_AS(lg.require("d"), GraphError);
}

TEST_CASE("edge list skips comments and rejects bad headers") {
    std::istringstream in("# path on three vertices\n3 2\n0 1\n1 2\n");
    CHECK(read_edge_list(in).graph.edge_count() == 2);

    std::istringstream bad("oops\n");
    CHECK_THROWS_AS(read_edge_list(bad), GraphError);

    std::istringstream truncated("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(truncated), GraphError);

    // Integer ids are taken at face value, so out-of-range ones are an
    // error rather than a silent switch to label mode.
    std::istringstream oob("2 1\n0 5\n");
    CHECK_THROWS_AS(read_edge_list(oob), GraphError);
}

TEST_CASE("dimacs reader is 1-indexed") {
    std::istringstream in("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    LabeledGraph lg = read_dimacs(in);
    CHECK(lg.graph.vertex_count() == 3);
    CHECK(lg.graph.edge_count() == 3);
    CHECK(lg.graph.has_edge(0, 2));

    std::istringstream oob("p edge 2 1\ne 1 3\n");
    CHECK_THROWS_AS(read_dimacs(oob), GraphError);
}
