#include <doctest.h>

#include <vector>

#include "upb/bounds.hpp"

using namespace upb;

namespace {

BoundReport report(std::initializer_list<int> dims) { return f_m(SystemSpec(std::vector<int>(dims))); }

} // namespace

TEST_SUITE("bounds") {

TEST_CASE("trivial lower bound") {
    CHECK(f_N(SystemSpec({3, 3})) == 5);
    CHECK(f_N(SystemSpec({4, 6})) == 9);
    CHECK(f_N(SystemSpec({2, 2, 9})) == 12);
}

TEST_CASE("system spec validation and sorting") {
    CHECK_THROWS_AS(SystemSpec({5}), DomainError);
    CHECK_THROWS_AS(SystemSpec({1, 4}), DomainError);
    const SystemSpec spec({6, 2, 4});
    CHECK(spec.dims() == std::vector<int>{2, 4, 6});
    CHECK(spec.caller_dims() == std::vector<int>{6, 2, 4});
    CHECK(spec.caller_index(0) == 1); // the 2 sits at caller slot 1
    CHECK(spec.caller_index(2) == 0);
}

TEST_CASE("rule cascade on the documented examples") {
    auto r = report({2, 5});
    CHECK(r.exact);
    CHECK(r.f_m_value == 10);
    CHECK(r.rule == Rule::Case1);

    r = report({4, 4});
    CHECK(r.exact);
    CHECK(r.f_m_value == 8);
    CHECK(r.rule == Rule::Case4Table);

    r = report({3, 3});
    CHECK(r.exact);
    CHECK(r.f_m_value == 5);
    CHECK(r.rule == Rule::Case2);

    r = report({4, 6});
    CHECK(r.exact);
    CHECK(r.f_m_value == 10);
    CHECK(r.rule == Rule::Theorem1);

    r = report({2, 2, 9});
    CHECK(r.exact);
    CHECK(r.f_m_value == 12);
    CHECK(r.rule == Rule::Theorem2);

    r = report({2, 2, 7});
    CHECK_FALSE(r.exact);
    CHECK(r.f_m_value == 10);
    CHECK(r.rule == Rule::Unknown);

    r = report({2, 2, 2, 2, 2, 2, 2, 2});
    CHECK_FALSE(r.exact);
    CHECK(r.f_m_value == 10);
    CHECK(r.rule == Rule::Unknown);

    // All-qubit systems split by p mod 4.
    r = report({2, 2, 2, 2, 2, 2});
    CHECK(r.rule == Rule::Case3Qubits);
    CHECK(r.f_m_value == 8);
    r = report({2, 2, 2});
    CHECK(r.rule == Rule::Case2); // f_N = 4 even
    CHECK(r.f_m_value == 4);

    // Smallest unsolved tripartite shape away from the qubit families.
    r = report({3, 4, 4});
    CHECK_FALSE(r.exact);
    CHECK(r.f_m_value == 10);
    CHECK(r.rule == Rule::Unknown);
}

TEST_CASE("theorem 1 applicability diagnostics") {
    CHECK(theorem1_applicable(SystemSpec({4, 6})).applicable);

    auto check = theorem1_applicable(SystemSpec({2, 2, 5}));
    CHECK_FALSE(check.applicable);
    CHECK(check.diagnostic.find("< 3") != std::string::npos);

    check = theorem1_applicable(SystemSpec({3, 3}));
    CHECK_FALSE(check.applicable);
    CHECK(check.diagnostic.find("case (2)") != std::string::npos);

    check = theorem1_applicable(SystemSpec({2, 9}));
    CHECK_FALSE(check.applicable);
    CHECK(check.diagnostic.find("case (1)") != std::string::npos);

    check = theorem1_applicable(SystemSpec({4, 4, 4}));
    CHECK_FALSE(check.applicable);
    CHECK(check.diagnostic.find("d_p - 1") != std::string::npos);
}

TEST_CASE("theorem 2 shape detection") {
    CHECK(theorem2_parameter(SystemSpec({2, 2, 5})) == 1);
    CHECK(theorem2_parameter(SystemSpec({2, 2, 9})) == 2);
    CHECK(theorem2_parameter(SystemSpec({2, 2, 7})) == 0);
    CHECK(theorem2_parameter(SystemSpec({2, 2, 3})) == 0); // k = 0 is not covered
    CHECK(theorem2_parameter(SystemSpec({2, 3, 5})) == 0);
}

TEST_CASE("exact values never undercut the trivial bound") {
    for (int d1 = 2; d1 <= 7; ++d1) {
        for (int d2 = d1; d2 <= 7; ++d2) {
            for (int d3 = d2; d3 <= 7; ++d3) {
                const SystemSpec spec({d1, d2, d3});
                const BoundReport r = f_m(spec);
                CHECK(r.f_m_value >= f_N(spec));
                // The trivial bound is attained exactly via the parity rule.
                if (r.exact && r.f_m_value == r.f_N) CHECK(r.rule == Rule::Case2);
                if (r.rule == Rule::Case2) CHECK(r.f_m_value == r.f_N);
            }
        }
    }
}

TEST_CASE("b parameter is integral whenever theorem 1 applies") {
    // Enumerate sorted dimension vectors with p <= 5, d_p <= 10.
    for (int p = 2; p <= 5; ++p) {
        std::vector<int> dims(p, 2);
        while (true) {
            bool sorted = true;
            for (int i = 0; i + 1 < p; ++i) sorted = sorted && dims[i] <= dims[i + 1];
            if (sorted) {
                const SystemSpec spec(dims);
                if (theorem1_applicable(spec).applicable) {
                    long prefix = 0;
                    for (int i = 0; i + 1 < p; ++i) prefix += dims[i] - 1;
                    CHECK((dims[p - 1] - 1 - prefix) % 2 == 0);
                }
            }
            int pos = p - 1;
            while (pos >= 0 && dims[pos] == 10) --pos;
            if (pos < 0) break;
            ++dims[pos];
            for (int i = pos + 1; i < p; ++i) dims[i] = 2;
        }
    }
}

TEST_CASE("table values agree with the general theorems where both fire") {
    // Forced through the theorem route by bypassing the table lookup order:
    // check value equality instead.
    for (const auto& dims : {std::vector<int>{4, 4}, {2, 2, 2, 4}, {2, 2, 2, 2, 5}}) {
        const SystemSpec spec(dims);
        CHECK(theorem1_applicable(spec).applicable);
        CHECK(f_m(spec).f_m_value == f_N(spec) + 1);
    }
    const SystemSpec tri({2, 2, 5});
    CHECK(theorem2_parameter(tri) == 1);
    CHECK(f_m(tri).f_m_value == f_N(tri) + 1);
}

TEST_CASE("rule names round out the reporting surface") {
    CHECK(rule_name(Rule::Case1) == "Case1");
    CHECK(rule_name(Rule::Theorem2) == "Theorem2");
    CHECK_FALSE(rule_description(Rule::Unknown).empty());
}

} // TEST_SUITE
