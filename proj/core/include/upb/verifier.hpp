#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "upb/gadgets.hpp"
#include "upb/types.hpp"

namespace upb {

/// One line of a certificate: a named check with its worst residual (or a
/// textual witness) and whether it passed.
struct CheckResult {
    std::string name;
    bool passed = false;
    double residual = 0.0;
    std::string detail;
};

enum class Outcome { Pass, Fail, Inconclusive };

/// Aggregated verdict. The verdict is Pass iff every check passed; a Fail
/// verdict on unextendibility carries the extending witness.
struct Certificate {
    Outcome outcome = Outcome::Pass;
    std::vector<CheckResult> checks;
    std::optional<ProductState> witness;      // extending product state
    std::optional<std::vector<int>> partition; // party assignment behind the witness
    std::string mode; // "exact" or "sufficient" for unextendibility

    bool passed() const { return outcome == Outcome::Pass; }
    void add(CheckResult check);
    std::string summary() const;
};

/// Condition: for every pair of states the product of the per-party local
/// inner products is zero within orth_tol (relative to the norm product).
Certificate verify_mutual_orthogonality(const ProductBasis& pb, const Tolerances& tol = {});

/// Pass iff every m-subset of the vectors has full rank d (the ambient
/// dimension). Exhaustive over all subsets; the first failure is reported.
Certificate verify_spanning_threshold(const std::vector<CVector>& vectors, int m,
                                      const Tolerances& tol = {});

/// The four conditions on a Lemma1Matrix: orthonormal columns, the cyclic
/// zero pattern, the r x r nonsingular sweep for
/// r in {b+2, ..., d-b} minus {d-b-1}, and the bottom-rows b x b sweep.
Certificate verify_lemma1(const Lemma1Matrix& cand, const Tolerances& tol = {});

/// Band orthogonality plus the exhaustive (r+1) x (r+1) nonsingular sweep
/// (exact integer determinants when the matrix is integral).
Certificate verify_lemma2(const Lemma2Matrix& cand, const Tolerances& tol = {});

/// The three orthogonality patterns plus the exhaustive sweep over all
/// column-triple removals.
Certificate verify_lemma3(const Lemma3Matrix& cand, const Tolerances& tol = {});

/// Exact extendibility decision by partition enumeration.
struct ExtendibilityResult {
    bool extendible = false;
    std::optional<ProductState> witness;  // verified extending state
    std::vector<int> assignment;          // state -> party, when extendible
    std::uint64_t nodes_visited = 0;
    double witness_overlap = 0.0;         // max |<s|witness>| over states
};

/// Decides whether some product state is orthogonal to every element of pb,
/// by assigning each state to a party whose local vectors must then fail to
/// span. Throws ResourceError when p^n exceeds the budget; the sufficient
/// spanning-threshold check in verify_upb covers those sizes.
ExtendibilityResult is_extendible(const ProductBasis& pb, const Tolerances& tol = {},
                                  std::uint64_t budget = 10'000'000);

enum class UnextendibilityMode { Auto, Exact, Sufficient };

/// Full UPB certificate: mutual orthogonality, per-party orthogonality-graph
/// union completeness, and unextendibility (exact partition enumeration when
/// it fits the budget, otherwise the spanning-threshold counting bound).
Certificate verify_upb(const ProductBasis& pb, const Tolerances& tol = {},
                       UnextendibilityMode mode = UnextendibilityMode::Auto,
                       std::uint64_t budget = 10'000'000);

/// Largest number of the given two-qubit product pairs that a single product
/// state z1 (x) z2 can be orthogonal to; exact by enumerating the finitely
/// many candidate directions (the perps of the factors).
int max_qubit_pair_orthogonality(const std::vector<std::array<CVector, 2>>& pairs,
                                 const Tolerances& tol = {});

} // namespace upb
