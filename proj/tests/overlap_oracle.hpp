#pragma once

// Test-only brute-force oracle: decides extendibility of a set of product
// states by direct numerical minimization of the total squared overlap
//   f(z) = sum_s |<s|z>|^2
// over unit product states z, independently of the partition-enumeration
// path in the library. The minimum is ~0 exactly when some product state is
// orthogonal to every element of the set.
//
// Minimization is alternating: with all factors but one fixed, f is a
// Hermitian quadratic form in the remaining factor, minimized by the
// eigenvector of the smallest eigenvalue. Multiple random restarts guard
// against local minima; the instances under test are tiny.

#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

#include "upb/numerics.hpp"
#include "upb/types.hpp"

namespace upb_test {

inline double min_total_overlap(const upb::ProductBasis& pb, std::uint64_t seed, int restarts = 30,
                                int iterations = 120) {
    const int n = pb.size();
    const int p = pb.parties();
    std::mt19937_64 rng(seed);
    double best = std::numeric_limits<double>::infinity();

    for (int attempt = 0; attempt < restarts; ++attempt) {
        std::vector<upb::CVector> z(p);
        for (int j = 0; j < p; ++j) z[j] = upb::random_unit_vector(pb.dims[j], rng);

        double value = 0.0;
        for (int iter = 0; iter < iterations; ++iter) {
            for (int j = 0; j < p; ++j) {
                // f(z_j) = z_j^H M z_j with M built from the other factors.
                upb::CMatrix m = upb::CMatrix::Zero(pb.dims[j], pb.dims[j]);
                for (int i = 0; i < n; ++i) {
                    double weight = 1.0;
                    for (int jj = 0; jj < p; ++jj) {
                        if (jj == j) continue;
                        weight *= std::norm(upb::inner_product(pb.states[i].factors[jj], z[jj]));
                    }
                    const upb::CVector& s = pb.states[i].factors[j];
                    m += weight * (s * s.adjoint());
                }
                Eigen::SelfAdjointEigenSolver<upb::CMatrix> eig(m);
                z[j] = eig.eigenvectors().col(0);
                value = eig.eigenvalues()(0);
            }
            if (value < 1e-14) break;
        }
        best = std::min(best, value);
        if (best < 1e-14) break;
    }
    return best;
}

/// The oracle's extendibility verdict at the stated threshold.
inline bool oracle_extendible(const upb::ProductBasis& pb, std::uint64_t seed,
                              double threshold = 1e-6) {
    return min_total_overlap(pb, seed) < threshold;
}

/// Random product basis (not necessarily orthogonal) for oracle comparisons.
inline upb::ProductBasis random_product_set(const std::vector<int>& dims, int n,
                                            std::mt19937_64& rng) {
    upb::ProductBasis pb;
    pb.dims = dims;
    pb.construction = "random";
    for (int i = 0; i < n; ++i) {
        upb::ProductState s;
        for (int d : dims) s.factors.push_back(upb::random_unit_vector(d, rng));
        pb.states.push_back(std::move(s));
    }
    return pb;
}

} // namespace upb_test
