#include <doctest.h>

#include "upb/assembler.hpp"
#include "upb/fixtures.hpp"
#include "upb/graphs.hpp"
#include "upb/numerics.hpp"
#include "upb/verifier.hpp"

using namespace upb;

TEST_SUITE("assembler") {

TEST_CASE("theorem 1 plans") {
    const Theorem1Plan p46 = plan_theorem1(SystemSpec({4, 6}));
    CHECK(p46.b == 1);
    CHECK(p46.q == 5);
    CHECK(p46.regularities == std::vector<int>{3});
    CHECK(p46.shifts == std::vector<int>{2});

    const Theorem1Plan p66 = plan_theorem1(SystemSpec({6, 6}));
    CHECK(p66.b == 0);
    CHECK(p66.q == 6);
    CHECK(p66.regularities == std::vector<int>{5});
    CHECK(p66.shifts == std::vector<int>{1});

    const Theorem1Plan p2224 = plan_theorem1(SystemSpec({2, 2, 2, 4}));
    CHECK(p2224.b == 0);
    CHECK(p2224.q == 4);
    CHECK(p2224.regularities == std::vector<int>{1, 1, 1});
    CHECK(p2224.shifts == std::vector<int>{1, 2, 3});

    CHECK_THROWS_AS(plan_theorem1(SystemSpec({2, 2, 5})), DomainError);
}

TEST_CASE("plan invariants: band widths tile the complement") {
    for (const auto& dims :
         {std::vector<int>{4, 6}, {6, 6}, {4, 4}, {2, 2, 2, 4}, {2, 3, 3, 8}, {2, 2, 4, 8}}) {
        const SystemSpec spec(dims);
        if (!theorem1_applicable(spec).applicable) continue;
        const Theorem1Plan plan = plan_theorem1(spec);
        int sum = 0;
        for (int r : plan.regularities) sum += r;
        CHECK(sum == spec.dims().back() - 2 * plan.b - 1);
        CHECK(plan.shifts.front() == plan.b + 1);
        CHECK(plan.shifts.back() + plan.regularities.back() <= plan.q);
    }
}

TEST_CASE("theorem 1 basis for (4,6)") {
    const ProductBasis pb = build_theorem1_upb(SystemSpec({4, 6}), 1);
    CHECK(pb.size() == 10);
    CHECK(pb.b == 1);
    CHECK(pb.construction == "theorem1");
    CHECK(verify_upb(pb).passed());

    // Party-2 vectors realize graph_D(6,1); party-1 vectors the matching band
    // layer of its complement.
    std::vector<CVector> second, first;
    for (const ProductState& s : pb.states) {
        first.push_back(s.factors[0]);
        second.push_back(s.factors[1]);
    }
    CHECK(contains(orthogonality_graph_of(second), graph_D(6, 1)));
    CHECK(contains(orthogonality_graph_of(first), graph_C_layer(6, 1, 3, 2)));
}

TEST_CASE("published (4,6) instance drops in as overrides") {
    Theorem1Options options;
    options.layer_overrides.emplace(0, fixture_w532());
    options.u_override = build_U_6_1();
    const ProductBasis pb = build_theorem1_upb(SystemSpec({4, 6}), 0, options);
    CHECK(pb.size() == 10);
    CHECK(verify_upb(pb).passed());

    const CMatrix& w = fixture_w532().V;
    const CMatrix& u = build_U_6_1().U;
    for (int j = 0; j < 5; ++j) {
        // v_j = normalized W column j (x) |j>
        CHECK((pb.states[j].factors[0] - w.col(j).normalized()).norm() < 1e-15);
        CHECK(pb.states[j].factors[1](j) == Complex(1, 0));
        // w_j = normalized W column 5+j (x) the aligned column of U_{6,1}
        CHECK((pb.states[5 + j].factors[0] - w.col(5 + j).normalized()).norm() < 1e-15);
        CHECK((pb.states[5 + j].factors[1] - u.col(((j - 1) % 5 + 5) % 5)).norm() < 1e-15);
    }

    Theorem1Options bad;
    bad.layer_overrides.emplace(0, build_V(5, 3, 1, 1));
    CHECK_THROWS_AS(build_theorem1_upb(SystemSpec({4, 6}), 0, bad), DimensionError);
}

TEST_CASE("theorem 1 basis for (6,6) and (2,2,2,4)") {
    const ProductBasis pb66 = build_theorem1_upb(SystemSpec({6, 6}), 2);
    CHECK(pb66.size() == 12);
    CHECK(verify_upb(pb66).passed());

    const ProductBasis pb2224 = build_theorem1_upb(SystemSpec({2, 2, 2, 4}), 2);
    CHECK(pb2224.size() == 8);
    CHECK(pb2224.size() == f_m(SystemSpec({2, 2, 2, 4})).f_m_value);
    CHECK(verify_upb(pb2224).passed());
}

TEST_CASE("theorem 1 spanning thresholds hold exhaustively at (4,6)") {
    const ProductBasis pb = build_theorem1_upb(SystemSpec({4, 6}), 3);
    std::vector<CVector> first, second;
    for (const ProductState& s : pb.states) {
        first.push_back(s.factors[0]);
        second.push_back(s.factors[1]);
    }
    CHECK(verify_spanning_threshold(second, 7, {}).passed());  // C(10,7) subsets of C^6
    CHECK(verify_spanning_threshold(first, 4, {}).passed());   // C(10,4) subsets of C^4
}

TEST_CASE("theorem 2 basis sizes and verification") {
    const ProductBasis pb1 = build_theorem2_upb(1, 4);
    CHECK(pb1.size() == 8);
    CHECK(pb1.dims == std::vector<int>{2, 2, 5});
    CHECK(pb1.size() == f_m(SystemSpec({2, 2, 5})).f_m_value);
    CHECK_FALSE(pb1.b.has_value());
    CHECK(verify_upb(pb1).passed());

    // The three per-party orthogonality graphs union to K_8.
    OrthGraph acc{4, {}};
    for (int j = 0; j < 3; ++j) {
        std::vector<CVector> vectors;
        for (const ProductState& s : pb1.states) vectors.push_back(s.factors[j]);
        acc = graph_union(acc, orthogonality_graph_of(vectors));
    }
    CHECK(is_complete(acc));

    const ProductBasis pb2 = build_theorem2_upb(2, 4);
    CHECK(pb2.size() == 12);
    CHECK(verify_upb(pb2).passed());

    CHECK_THROWS_AS(build_theorem2_upb(0, 1), DomainError);
}

TEST_CASE("dispatch covers both constructions and rejects open cases") {
    CHECK(build_minimal_upb(SystemSpec({4, 6}), 1).construction == "theorem1");
    CHECK(build_minimal_upb(SystemSpec({2, 2, 9}), 1).construction == "theorem2");

    CHECK_THROWS_AS(build_minimal_upb(SystemSpec({2, 2, 7}), 1), UnsupportedCaseError);
    CHECK_THROWS_WITH_AS(build_minimal_upb(SystemSpec({2, 2, 7}), 1),
                         doctest::Contains("open problem"), UnsupportedCaseError);
    // Solved shapes whose constructions live elsewhere are named as such.
    CHECK_THROWS_WITH_AS(build_minimal_upb(SystemSpec({2, 5}), 1),
                         doctest::Contains("out of scope"), UnsupportedCaseError);
}

TEST_CASE("caller party order is restored") {
    const SystemSpec spec({6, 4});
    const ProductBasis pb = build_theorem1_upb(spec, 1);
    CHECK(pb.dims == std::vector<int>{6, 4});
    CHECK(pb.states[0].factors[0].size() == 6);
    CHECK(pb.states[0].factors[1].size() == 4);
    CHECK(verify_upb(pb).passed());

    const ProductBasis tri = build_minimal_upb(SystemSpec({9, 2, 2}), 1);
    CHECK(tri.dims == std::vector<int>{9, 2, 2});
    CHECK(tri.states[0].factors[0].size() == 9);
    CHECK(verify_upb(tri).passed());
}

TEST_CASE("basis sizes always land on f_N + 1") {
    for (const auto& dims : {std::vector<int>{4, 4}, {4, 6}, {6, 6}, {2, 2, 2, 4}, {2, 3, 4}}) {
        const SystemSpec spec(dims);
        if (!theorem1_applicable(spec).applicable) continue;
        CHECK(build_theorem1_upb(spec, 5).size() == f_N(spec) + 1);
    }
    CHECK(build_theorem2_upb(1, 5).size() == f_N(SystemSpec({2, 2, 5})) + 1);
}

} // TEST_SUITE
