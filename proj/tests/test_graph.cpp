#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "edgeflow/dense.hpp"
#include "edgeflow/errors.hpp"
#include "edgeflow/graph.hpp"
#include "test_support.hpp"

using namespace edgeflow;

namespace {

DenseMatrix dense_of(const SparseMatrix& m) { return to_dense(m); }

bool dense_equal(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

}  // namespace

TEST_CASE("construction rejects bad input") {
    const std::vector<std::pair<int, int>> self{{0, 0}};
    CHECK_THROWS_AS(Graph::from_pairs(2, self), SelfLoopError);
    const std::vector<std::pair<int, int>> dup{{0, 1}, {1, 0}};
    CHECK_THROWS_AS(Graph::from_pairs(2, dup), DuplicateEdgeError);
    CHECK_THROWS_AS(Graph::from_oriented(2, dup), DuplicateEdgeError);
    const std::vector<std::pair<int, int>> oob{{0, 2}};
    CHECK_THROWS_AS(Graph::from_pairs(2, oob), NodeIndexError);
    const std::vector<std::pair<int, int>> neg{{-1, 0}};
    CHECK_THROWS_AS(Graph::from_pairs(2, neg), NodeIndexError);
}

TEST_CASE("from_pairs canonicalizes orientation, from_oriented preserves it") {
    const std::vector<std::pair<int, int>> p{{2, 0}};
    const Graph a = Graph::from_pairs(3, p);
    CHECK(a.edge(0).tail == 0);
    CHECK(a.edge(0).head == 2);
    const Graph b = Graph::from_oriented(3, p);
    CHECK(b.edge(0).tail == 2);
    CHECK(b.edge(0).head == 0);
}

TEST_CASE("edge accessor bounds") {
    const Graph g = testsup::triangle();
    CHECK_THROWS_AS(g.edge(3), EdgeIndexError);
    CHECK_THROWS_AS(g.edge(-1), EdgeIndexError);
}

TEST_CASE("triangle incidence matrix matches the hand oracle") {
    const Graph g = testsup::triangle();
    const DenseMatrix b = dense_of(incidence_matrix(g));
    // edges are (0,1), (1,2), (0,2)
    const double want[3][3] = {{-1, 0, -1}, {1, -1, 0}, {0, 1, 1}};
    REQUIRE(b.rows() == 3);
    REQUIRE(b.cols() == 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(b(i, j) == want[i][j]);
}

TEST_CASE("triangle laplacians match the hand oracles") {
    const Graph g = testsup::triangle();
    const DenseMatrix l = dense_of(graph_laplacian(g));
    const DenseMatrix l1 = dense_of(edge_laplacian(g));
    const double lw[3][3] = {{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
    const double l1w[3][3] = {{2, -1, 1}, {-1, 2, 1}, {1, 1, 2}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CHECK(l(i, j) == lw[i][j]);
            CHECK(l1(i, j) == l1w[i][j]);
        }
}

TEST_CASE("path3 edge laplacian and line graph laplacian") {
    const Graph g = testsup::path3();
    const DenseMatrix l1 = dense_of(edge_laplacian(g));
    CHECK(l1(0, 0) == 2);
    CHECK(l1(0, 1) == -1);
    CHECK(l1(1, 0) == -1);
    CHECK(l1(1, 1) == 2);
    const DenseMatrix llg = dense_of(line_graph_laplacian(g));
    CHECK(llg(0, 0) == 1);
    CHECK(llg(0, 1) == -1);
    CHECK(llg(1, 0) == -1);
    CHECK(llg(1, 1) == 1);
}

TEST_CASE("line graph of a triangle is a triangle") {
    const Graph lg = line_graph(testsup::triangle());
    CHECK(lg.num_nodes() == 3);
    CHECK(lg.num_edges() == 3);
    const DenseMatrix a = dense_of(adjacency_matrix(lg));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(a(i, j) == (i == j ? 0.0 : 1.0));
}

TEST_CASE("line graph laplacian equals graph laplacian of line graph") {
    edgeflow::flowgen::Rng rng(901);
    for (int t = 0; t < 20; ++t) {
        const Graph g = testsup::random_connected_graph(rng, 2, 10);
        CHECK(dense_equal(dense_of(line_graph_laplacian(g)),
                          dense_of(graph_laplacian(line_graph(g)))));
    }
}

TEST_CASE("line graph adjacency is |B^T B - 2I| elementwise") {
    edgeflow::flowgen::Rng rng(902);
    for (int t = 0; t < 20; ++t) {
        const Graph g = testsup::random_connected_graph(rng, 2, 10);
        const DenseMatrix l1 = dense_of(edge_laplacian(g));
        const DenseMatrix a = dense_of(line_graph_adjacency(g));
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) {
                const double want = std::abs(l1(i, j) - (i == j ? 2.0 : 0.0));
                CHECK(a(i, j) == want);
            }
    }
}

TEST_CASE("laplacian identities on random graphs") {
    edgeflow::flowgen::Rng rng(903);
    for (int t = 0; t < 50; ++t) {
        const Graph g = testsup::random_connected_graph(rng, 2, 12);
        const DenseMatrix b = dense_of(incidence_matrix(g));
        CHECK(dense_equal(dense_of(graph_laplacian(g)), multiply(b, b.transposed())));
        CHECK(dense_equal(dense_of(edge_laplacian(g)), multiply(b.transposed(), b)));
    }
}

TEST_CASE("connected component count") {
    CHECK(connected_component_count(testsup::triangle()) == 1);
    const std::vector<std::pair<int, int>> p{{0, 1}, {2, 3}};
    CHECK(connected_component_count(Graph::from_pairs(5, p)) == 3);
    CHECK(connected_component_count(Graph::from_pairs(3, {})) == 3);
}

TEST_CASE("with_flipped_edge negates one incidence column") {
    const Graph g = testsup::triangle();
    const Graph h = g.with_flipped_edge(1);
    CHECK(h.edge(1).tail == 2);
    CHECK(h.edge(1).head == 1);
    CHECK(h.edge(0) == g.edge(0));
    const DenseMatrix bg = dense_of(incidence_matrix(g));
    const DenseMatrix bh = dense_of(incidence_matrix(h));
    for (int i = 0; i < 3; ++i) {
        CHECK(bh(i, 1) == -bg(i, 1));
        CHECK(bh(i, 0) == bg(i, 0));
        CHECK(bh(i, 2) == bg(i, 2));
    }
    CHECK_THROWS_AS(g.with_flipped_edge(7), EdgeIndexError);
}

TEST_CASE("cyclic triangle has the constant circulation in its kernel") {
    const Graph g = testsup::cyclic_triangle();
    const DenseMatrix b = dense_of(incidence_matrix(g));
    for (int i = 0; i < 3; ++i) {
        double s = 0.0;
        for (int j = 0; j < 3; ++j) s += b(i, j);
        CHECK(s == 0.0);
    }
}

TEST_CASE("degree matrix is diagonal row sums of adjacency") {
    edgeflow::flowgen::Rng rng(904);
    const Graph g = testsup::random_connected_graph(rng, 4, 10);
    const DenseMatrix a = dense_of(adjacency_matrix(g));
    const DenseMatrix d = dense_of(degree_matrix(g));
    for (int i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (int j = 0; j < a.cols(); ++j) {
            s += a(i, j);
            if (i != j) CHECK(d(i, j) == 0.0);
        }
        CHECK(d(i, i) == s);
    }
}
