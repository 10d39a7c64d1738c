#pragma once

#include <string>

#include "upb/types.hpp"

namespace upb {

/// Which rule of the minimum-size case analysis produced the answer.
enum class Rule {
    Case1,       // bipartite with a dimension-2 factor: d1*d2
    Case2,       // trivial bound attained: f_N even or all dims odd
    Case3Qubits, // all-qubit systems with p = 2 (mod 4): p + 2
    Case4Table,  // individually known small systems
    Theorem1,    // dominated largest party: f_N + 1
    Theorem2,    // (2, 2, 4k+1): f_N + 1
    Unknown,     // open case; only the lower bound f_N + 1 is known
};

std::string rule_name(Rule rule);

/// Human-readable statement of the rule that fired.
std::string rule_description(Rule rule);

/// Minimum-size answer for one dimension vector.
struct BoundReport {
    long f_N = 0;
    bool exact = false; // false: f_m_value is only a lower bound
    long f_m_value = 0;
    Rule rule = Rule::Unknown;
};

/// The trivial lower bound sum(d_j - 1) + 1.
long f_N(const SystemSpec& spec);

/// Evaluates the case cascade (1), (2), qubits, known table, then the two
/// f_N + 1 families; anything left over reports LowerBoundOnly(f_N + 1).
BoundReport f_m(const SystemSpec& spec);

struct Theorem1Applicability {
    bool applicable = false;
    std::string diagnostic; // first failed hypothesis when not applicable
};

/// Hypotheses: neither case (1) nor (2) holds, and
/// d_p - 1 >= sum_{j<p}(d_j - 1) >= 3.
Theorem1Applicability theorem1_applicable(const SystemSpec& spec);

/// True iff dims are (2, 2, 4k+1) for some k >= 1; returns k or 0.
int theorem2_parameter(const SystemSpec& spec);

} // namespace upb
