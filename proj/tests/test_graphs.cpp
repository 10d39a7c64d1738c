#include <doctest.h>

#include <random>

#include "upb/fixtures.hpp"
#include "upb/graphs.hpp"
#include "upb/numerics.hpp"

using namespace upb;

TEST_SUITE("graphs") {

TEST_CASE("graph_D(6,0): two 6-cliques plus the perfect matching") {
    const OrthGraph g = graph_D(6, 0);
    CHECK(g.vertex_count() == 12);
    // 2 * C(6,2) clique edges plus (b+1)(d-b) cross edges
    CHECK(g.edge_count() == 15 + 15 + 6);
    for (int i = 0; i < 6; ++i) {
        CHECK(g.has_edge(i, 6 + i));
        for (int j = i + 1; j < 6; ++j) {
            CHECK(g.has_edge(i, j));
            CHECK(g.has_edge(6 + i, 6 + j));
        }
    }
    CHECK_FALSE(g.has_edge(0, 6 + 1));
    CHECK_FALSE(is_complete(g));
}

TEST_CASE("graph_D(7,1) adds the six shifted cross edges") {
    const OrthGraph six = graph_D(6, 0);
    const OrthGraph seven = graph_D(7, 1);
    CHECK(seven.vertex_count() == 12);
    CHECK(contains(seven, six));
    CHECK(seven.edge_count() == six.edge_count() + 6);
    for (int i = 0; i < 6; ++i) CHECK(seven.has_edge(i, 6 + (i + 1) % 6));
}

TEST_CASE("graph_D domain errors") {
    CHECK_THROWS_AS(graph_D(5, 1), DomainError);
    CHECK_THROWS_AS(graph_D(6, -1), DomainError);
}

TEST_CASE("graph_C is the complement of graph_D") {
    const OrthGraph c = graph_C(6, 0);
    CHECK(c.edge_count() == 30);
    CHECK(is_complete(graph_union(graph_D(6, 0), c)));

    const OrthGraph c71 = graph_C(7, 1);
    CHECK(c71.has_edge(0, 6 + 2));       // l = 2 lies inside the band
    CHECK_FALSE(c71.has_edge(0, 6 + 1)); // l = 1 <= b does not

    for (int b = 0; b <= 3; ++b) {
        for (int d = 2 * b + 4; d <= 12; ++d) {
            CHECK(complement(graph_D(d, b)).edges == graph_C(d, b).edges);
        }
    }
}

TEST_CASE("layer graphs match the band rule and are r-regular") {
    const OrthGraph left = graph_C_layer(6, 0, 2, 1);
    for (int i = 0; i < 6; ++i) {
        CHECK(left.has_edge(i, 6 + (i + 1) % 6));
        CHECK(left.has_edge(i, 6 + (i + 2) % 6));
    }
    CHECK(left.edge_count() == 12);
    for (int v = 0; v < 12; ++v) CHECK(left.degree(v) == 2);

    const OrthGraph right = graph_C_layer(6, 0, 3, 3);
    for (int v = 0; v < 12; ++v) CHECK(right.degree(v) == 3);
    CHECK(graph_union(left, right).edges == graph_C(6, 0).edges);

    CHECK(is_complete(graph_union(graph_union(left, right), graph_D(6, 0))));

    CHECK_THROWS_AS(graph_C_layer(6, 0, 0, 1), DomainError);
    CHECK_THROWS_AS(graph_C_layer(6, 0, 3, 4), DomainError);
}

TEST_CASE("random layer decompositions tile the complement exactly") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int b = static_cast<int>(rng() % 3);
        const int d = 2 * b + 4 + static_cast<int>(rng() % (12 - 2 * b - 3));
        const int width = d - 2 * b - 1;
        // random composition of the band width
        std::vector<int> regs;
        int left = width;
        while (left > 0) {
            const int r = 1 + static_cast<int>(rng() % left);
            regs.push_back(r);
            left -= r;
        }
        OrthGraph acc{d - b, {}};
        std::size_t edge_sum = 0;
        int s = b + 1;
        for (int r : regs) {
            const OrthGraph layer = graph_C_layer(d, b, r, s);
            edge_sum += layer.edge_count();
            acc = graph_union(acc, layer);
            s += r;
        }
        CHECK(acc.edges == graph_C(d, b).edges);
        CHECK(edge_sum == acc.edge_count()); // pairwise disjoint
    }
}

TEST_CASE("prism graph and its complement") {
    const OrthGraph y2 = graph_Y(2);
    CHECK(y2.vertex_count() == 12);
    CHECK(y2.edge_count() == 18);
    for (int v = 0; v < 12; ++v) CHECK(y2.degree(v) == 3);

    const OrthGraph y1 = graph_Y(1);
    CHECK(y1.vertex_count() == 8);
    CHECK(y1.edge_count() == 12);

    const OrthGraph x2 = graph_X(2);
    CHECK(x2.has_edge(0, 6 + 3));
    CHECK_FALSE(x2.has_edge(0, 6 + 0));

    for (int k = 1; k <= 5; ++k) {
        const OrthGraph y = graph_Y(k);
        const OrthGraph x = graph_X(k);
        CHECK(is_complete(graph_union(x, y)));
        for (int v = 0; v < y.vertex_count(); ++v) {
            CHECK(y.degree(v) == 3);
            CHECK(x.degree(v) == 4 * k);
        }
    }
    CHECK_THROWS_AS(graph_Y(0), DomainError);
}

TEST_CASE("union requires matching vertex counts; union is idempotent") {
    CHECK_THROWS_AS(graph_union(graph_Y(1), graph_Y(2)), DimensionError);
    const OrthGraph y = graph_Y(2);
    CHECK(graph_union(y, y).edges == y.edges);
}

TEST_CASE("orthogonality graph of explicit vectors") {
    std::vector<CVector> vectors;
    for (int i = 0; i < 3; ++i) {
        CVector e = CVector::Zero(3);
        e(i) = 1.0;
        vectors.push_back(e);
    }
    CVector ones(3);
    ones << 1, 1, 1;
    vectors.push_back(ones);
    const OrthGraph g = orthogonality_graph_of(vectors);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(0, 2 + 0)); // e_0 -- e_2 crosses the half boundary
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(0, 2 + 1));

    CHECK_THROWS_AS(orthogonality_graph_of({}), DimensionError);
    CHECK_THROWS_AS(orthogonality_graph_of({ones, CVector::Zero(2)}), DimensionError);
}

TEST_CASE("fixture columns realize their prescribed graphs") {
    const CMatrix& w532 = fixture_w532().V;
    std::vector<CVector> cols;
    for (int j = 0; j < w532.cols(); ++j) cols.push_back(w532.col(j));
    const OrthGraph got = orthogonality_graph_of(cols);
    CHECK(contains(got, graph_C_layer(5, 0, 3, 2)));

    const CMatrix& w2 = fixture_w2().W;
    std::vector<CVector> cols2;
    for (int j = 0; j < w2.cols(); ++j) cols2.push_back(w2.col(j));
    const OrthGraph got2 = orthogonality_graph_of(cols2);
    CHECK(contains(got2, graph_X(2)));

    // Exactly orthogonal integer fixtures do not care about the tolerance.
    for (double tol : {1e-12, 1e-9, 1e-6}) {
        Tolerances t;
        t.orth_tol = tol;
        CHECK(orthogonality_graph_of(cols, t).edges == got.edges);
        CHECK(orthogonality_graph_of(cols2, t).edges == got2.edges);
    }
}

TEST_CASE("DOT and edge-list exports are deterministic and labeled") {
    const OrthGraph y = graph_Y(1);
    const std::string dot = to_dot(y);
    CHECK(dot.substr(0, 7) == "graph {");
    CHECK(dot.find("\"v0\" -- \"v1\";") != std::string::npos);
    CHECK(dot.find("\"v0\" -- \"w0\";") != std::string::npos);
    CHECK(dot == to_dot(graph_Y(1)));
    CHECK(to_edge_list(y).find("v0 -- w0") != std::string::npos);
    CHECK(vertex_label(y, 0) == "v0");
    CHECK(vertex_label(y, 4) == "w0");
}

} // TEST_SUITE
