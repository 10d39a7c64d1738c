#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "upb/bounds.hpp"
#include "upb/gadgets.hpp"
#include "upb/types.hpp"

namespace upb {

/// Layer layout for the dominated-largest-party construction: party p gets
/// the Lemma1Matrix, each other party one r_j-regular band layer of the
/// cross-graph complement.
struct Theorem1Plan {
    SystemSpec spec;
    int b = 0;
    int q = 0;                      // d_p - b
    std::vector<int> regularities;  // r_j = d_j - 1, sorted party order
    std::vector<int> shifts;        // s_1 = b + 1, s_j = s_{j-1} + r_{j-1}
};

/// Computes b, q, and the shift family. The shift origin is s_1 = b + 1 so
/// the layers tile the complement band exactly; at b = 0 this is s_1 = 1.
Theorem1Plan plan_theorem1(const SystemSpec& spec);

/// Optional substitutions for reproducing specific published instances.
struct Theorem1Options {
    std::optional<std::vector<int>> shifts;
    std::map<int, Lemma2Matrix> layer_overrides; // keyed by sorted party index
    std::optional<Lemma1Matrix> u_override;
};

/// f_N + 1 = 2(d_p - b) product states: party p mixes standard basis states
/// with the Lemma1Matrix columns, every other party takes the two halves of
/// a Lemma2Matrix. The result is verified before it is returned.
ProductBasis build_theorem1_upb(const SystemSpec& spec, std::uint64_t seed,
                                const Theorem1Options& options = {}, const Tolerances& tol = {});

/// 4k+4 product states in C^2 (x) C^2 (x) C^{4k+1}: qubit-pair factors from
/// the prism family, third factors from a Lemma3Matrix. Verified before
/// returning.
ProductBasis build_theorem2_upb(int k, std::uint64_t seed, const Tolerances& tol = {});

/// Dispatches to whichever construction covers the spec, or throws
/// UnsupportedCaseError naming the open problem when there is none.
ProductBasis build_minimal_upb(const SystemSpec& spec, std::uint64_t seed,
                               const Tolerances& tol = {});

} // namespace upb
