#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "upb/errors.hpp"

namespace upb {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using IMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Numerical thresholds shared by every module.
///
/// orth_tol is relative to the product of the vector norms, rank_tol is
/// relative to the largest singular value, fixpoint_tol bounds the residuals
/// of iterative solvers.
struct Tolerances {
    double orth_tol = 1e-9;
    double rank_tol = 1e-8;
    double fixpoint_tol = 1e-12;

    void validate() const {
        if (!(orth_tol > 0.0 && orth_tol < 1.0)) throw DomainError("orth_tol must be in (0,1)");
        if (!(rank_tol > 0.0 && rank_tol < 1.0)) throw DomainError("rank_tol must be in (0,1)");
        if (!(fixpoint_tol > 0.0)) throw DomainError("fixpoint_tol must be positive");
    }
};

/// A multipartite problem instance: the list of local dimensions.
///
/// Dimensions are sorted ascending on construction (the constructions index
/// the largest dimension as the last party); the caller's original order is
/// recorded so emitted bases can be permuted back.
class SystemSpec {
  public:
    explicit SystemSpec(std::vector<int> dims);

    int parties() const { return static_cast<int>(sorted_.size()); }
    const std::vector<int>& dims() const { return sorted_; }
    int dim(int j) const { return sorted_.at(j); }
    const std::vector<int>& caller_dims() const { return caller_; }
    /// Caller-order index of the party holding the k-th sorted dimension.
    int caller_index(int sorted_pos) const { return order_.at(sorted_pos); }

    bool operator==(const SystemSpec& other) const { return caller_ == other.caller_; }

  private:
    std::vector<int> caller_;
    std::vector<int> sorted_;
    std::vector<int> order_;
};

/// One product state: a local vector per party, in caller order.
struct ProductState {
    std::vector<CVector> factors;
};

/// A set of product states with construction metadata.
struct ProductBasis {
    std::vector<int> dims;            // party dimensions, caller order
    std::vector<ProductState> states;
    std::string construction;         // "theorem1", "theorem2", "file", ...
    std::uint64_t seed = 0;
    std::optional<int> b;

    int parties() const { return static_cast<int>(dims.size()); }
    int size() const { return static_cast<int>(states.size()); }

    /// Checks factor counts, lengths, and unit norms (within 1e-10).
    void validate() const;
};

} // namespace upb
