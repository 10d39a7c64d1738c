#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "upb/types.hpp"

namespace upb {

/// Inner product, conjugate-linear in the first argument.
Complex inner_product(const CVector& a, const CVector& b);

/// Number of singular values exceeding rank_tol times the largest one.
/// The all-zero matrix has rank 0.
int rank(const CMatrix& m, const Tolerances& tol = {});

/// True iff the smallest singular value exceeds rank_tol times the largest.
bool nonsingular(const CMatrix& m, const Tolerances& tol = {});

/// Smallest and largest singular values.
std::pair<double, double> singular_value_range(const CMatrix& m);

/// Random unit vector orthogonal to every constraint row, sampled from a
/// continuous distribution over the orthogonal complement. The first
/// coordinate of magnitude above 1e-12 is made real-positive, so equal seeds
/// give bit-identical results.
///
/// Throws NoSolutionError when the rows span the full space.
CVector nullspace_vector(const std::vector<CVector>& rows, int dim, std::mt19937_64& rng,
                         const Tolerances& tol = {});
CVector nullspace_vector(const CMatrix& row_matrix, std::uint64_t seed, const Tolerances& tol = {});

/// Polar factor: the matrix with orthonormal columns nearest to m in
/// Frobenius distance. Requires rows >= cols and full column rank.
CMatrix nearest_isometry(const CMatrix& m, const Tolerances& tol = {});

/// e^{2 pi i power / k}. Throws DomainError for k < 1.
Complex root_of_unity(std::int64_t k, std::int64_t power);

/// Exact nonsingularity of a square integer matrix via fraction-free
/// (Bareiss) elimination over arbitrary-precision integers.
bool exact_nonsingular_int(const IMatrix& m);

/// True when every entry is a real integer (within eps).
bool is_integral(const CMatrix& m, double eps = 1e-9);

/// Rounds an integral complex matrix to IMatrix. Precondition: is_integral.
IMatrix to_integer(const CMatrix& m);

/// Standard complex Gaussian sample (Box-Muller over raw 53-bit uniforms, so
/// the stream depends only on the engine state, not on libstdc++ internals).
Complex complex_gaussian(std::mt19937_64& rng);

/// Uniform double in [0,1) from the top 53 bits of the engine output.
double uniform_unit(std::mt19937_64& rng);

/// Random unit vector in C^dim.
CVector random_unit_vector(int dim, std::mt19937_64& rng);

/// SplitMix64 step; used to derive independent sub-seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

} // namespace upb
