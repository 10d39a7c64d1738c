#include "upb/bounds.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace upb {

std::string rule_name(Rule rule) {
    switch (rule) {
        case Rule::Case1: return "Case1";
        case Rule::Case2: return "Case2";
        case Rule::Case3Qubits: return "Case3_qubits";
        case Rule::Case4Table: return "Case4_table";
        case Rule::Theorem1: return "Theorem1";
        case Rule::Theorem2: return "Theorem2";
        case Rule::Unknown: return "Unknown";
    }
    return "Unknown";
}

std::string rule_description(Rule rule) {
    switch (rule) {
        case Rule::Case1:
            return "bipartite with a dimension-2 factor: minimum is d1*d2";
        case Rule::Case2:
            return "trivial bound attained: f_N is even or all dimensions are odd";
        case Rule::Case3Qubits:
            return "all-qubit system with p = 2 (mod 4): minimum is p + 2";
        case Rule::Case4Table:
            return "individually known small system";
        case Rule::Theorem1:
            return "largest dimension dominates the rest: minimum is f_N + 1";
        case Rule::Theorem2:
            return "(2, 2, 4k+1) family: minimum is f_N + 1";
        case Rule::Unknown:
            return "open case: f_N + 1 is a lower bound, no matching value known";
    }
    return "";
}

long f_N(const SystemSpec& spec) {
    long sum = 1;
    for (int d : spec.dims()) sum += d - 1;
    return sum;
}

namespace {

bool case1_holds(const SystemSpec& spec) {
    return spec.parties() == 2 && spec.dim(0) == 2;
}

bool case2_holds(const SystemSpec& spec) {
    if (case1_holds(spec)) return false;
    if (f_N(spec) % 2 == 0) return true;
    return std::all_of(spec.dims().begin(), spec.dims().end(), [](int d) { return d % 2 == 1; });
}

bool all_qubits(const SystemSpec& spec) {
    return std::all_of(spec.dims().begin(), spec.dims().end(), [](int d) { return d == 2; });
}

const std::map<std::vector<int>, long>& known_table() {
    static const std::map<std::vector<int>, long> table = {
        {{4, 4}, 8},          {{2, 2, 3}, 6},       {{2, 2, 5}, 8},
        {{2, 2, 2, 2}, 6},    {{2, 2, 2, 4}, 8},    {{2, 2, 2, 2, 5}, 10},
    };
    return table;
}

long reduced_prefix_sum(const SystemSpec& spec) {
    long sum = 0;
    for (int j = 0; j + 1 < spec.parties(); ++j) sum += spec.dim(j) - 1;
    return sum;
}

} // namespace

Theorem1Applicability theorem1_applicable(const SystemSpec& spec) {
    if (case1_holds(spec)) return {false, "case (1) holds: bipartite with a dimension-2 factor"};
    if (case2_holds(spec)) return {false, "case (2) holds: f_N is even or all dimensions are odd"};
    const long prefix = reduced_prefix_sum(spec);
    if (prefix < 3) {
        std::ostringstream msg;
        msg << "sum of the first p-1 reduced dimensions is " << prefix << " < 3";
        return {false, msg.str()};
    }
    const long top = spec.dim(spec.parties() - 1) - 1;
    if (top < prefix) {
        std::ostringstream msg;
        msg << "d_p - 1 = " << top << " < " << prefix << " = sum of the other reduced dimensions";
        return {false, msg.str()};
    }
    return {true, ""};
}

int theorem2_parameter(const SystemSpec& spec) {
    if (spec.parties() != 3 || spec.dim(0) != 2 || spec.dim(1) != 2) return 0;
    const int d3 = spec.dim(2);
    if (d3 % 4 != 1) return 0;
    const int k = (d3 - 1) / 4;
    return k >= 1 ? k : 0;
}

BoundReport f_m(const SystemSpec& spec) {
    BoundReport report;
    report.f_N = f_N(spec);

    if (case1_holds(spec)) {
        report.exact = true;
        report.f_m_value = static_cast<long>(spec.dim(0)) * spec.dim(1);
        report.rule = Rule::Case1;
        return report;
    }
    if (case2_holds(spec)) {
        report.exact = true;
        report.f_m_value = report.f_N;
        report.rule = Rule::Case2;
        return report;
    }
    if (all_qubits(spec) && spec.parties() % 4 == 2) {
        report.exact = true;
        report.f_m_value = spec.parties() + 2;
        report.rule = Rule::Case3Qubits;
        return report;
    }
    if (auto it = known_table().find(spec.dims()); it != known_table().end()) {
        report.exact = true;
        report.f_m_value = it->second;
        report.rule = Rule::Case4Table;
        return report;
    }
    if (theorem1_applicable(spec).applicable) {
        report.exact = true;
        report.f_m_value = report.f_N + 1;
        report.rule = Rule::Theorem1;
        return report;
    }
    if (theorem2_parameter(spec) > 0) {
        report.exact = true;
        report.f_m_value = report.f_N + 1;
        report.rule = Rule::Theorem2;
        return report;
    }
    // Case (2) is an if-and-only-if, so f_N itself is excluded here.
    report.exact = false;
    report.f_m_value = report.f_N + 1;
    report.rule = Rule::Unknown;
    return report;
}

} // namespace upb
