#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "upb/types.hpp"

namespace upb {

/// A d x (d-b) matrix with orthonormal columns, a prescribed cyclic zero
/// pattern, and the nonsingular-submatrix guarantees that make any d+1 of
/// {standard basis, its columns} span C^d.
struct Lemma1Matrix {
    int d = 0;
    int b = 0;
    CMatrix U;
};

/// An (r+1) x 2q matrix whose last-q columns are orthogonal to a shifted
/// band of its first-q columns, with every (r+1)x(r+1) submatrix nonsingular.
struct Lemma2Matrix {
    int q = 0;
    int r = 0;
    int s = 0;
    CMatrix V;
};

/// A (4k+1) x (4k+4) block matrix [W_v | W_w] realizing the complement of
/// the prism graph, with every (4k+1)x(4k+1) submatrix nonsingular.
struct Lemma3Matrix {
    int k = 0;
    CMatrix W;

    int rows() const { return 4 * k + 1; }
    int block_cols() const { return 2 * k + 2; }
    CVector v_column(int i) const { return W.col(i); }
    CVector w_column(int i) const { return W.col(block_cols() + i); }
};

/// 4k+4 two-qubit product states built from 2k+2 distinct orthonormal bases
/// of C^2; their orthogonality graph contains the prism graph.
struct QubitPairFamily {
    int k = 0;
    std::vector<double> angles; // 2k+2 basis angles
    // first/second single-qubit factors; entries 0..2k+1 are the v's,
    // entries 2k+2..4k+3 the w's
    std::vector<std::array<CVector, 2>> factors;

    int size() const { return static_cast<int>(factors.size()); }
    /// The full C^2 (x) C^2 vector of state i.
    CVector state(int i) const;
};

/// The prescribed zero positions of Lemma1Matrix: (row, col) pairs
/// ((j+l) mod (d-b), j) for 0 <= j < d-b, 0 <= l <= b. Size (b+1)(d-b).
std::vector<std::pair<int, int>> lemma1_zero_pattern(int d, int b);

/// Analytic b = 0 construction: a d x d unitary with zero diagonal whose
/// first row and column are 1/sqrt(d-1) and whose remaining block comes from
/// a Fourier eigenbasis. Requires d >= 4.
///
/// With certify = true (default) the full nonsingular-submatrix sweep runs
/// and a CertificationError is thrown on failure.
Lemma1Matrix build_U_fourier(int d, bool certify = true);

/// The closed-form (d, b) = (6, 1) matrix; the one free coefficient is the
/// unique real root of 3u^3 - 2u^2 - 3u - 3, found by bisection on [1, 2].
Lemma1Matrix build_U_6_1(bool certify = true);

/// The raw unnormalized (6, 1) template with solved coefficients, plus the
/// root itself; build_U_6_1 normalizes its columns.
std::pair<CMatrix, double> u61_template();

/// Seeded generate-and-check for general (d, b), d >= 4 + 2b: alternating
/// projection between the zero-pattern subspace and the matrices with
/// orthonormal columns, then exhaustive certification; up to 25 restarts.
Lemma1Matrix build_U_general(int d, int b, std::uint64_t seed, const Tolerances& tol = {});

/// Seeded generate-and-check realization: first q columns random, last q
/// columns forced into the orthogonal complement of their band partners,
/// then exhaustive certification; up to 25 restarts. Requires q >= r + s.
Lemma2Matrix build_V(int q, int r, int s, std::uint64_t seed, const Tolerances& tol = {});

/// Seeded sequential fill of the prism-complement orthogonality pattern in
/// C^{4k+1}, then exhaustive certification; up to 25 restarts.
Lemma3Matrix build_W(int k, std::uint64_t seed, const Tolerances& tol = {});

/// Qubit-pair family with default angles theta_j = (j+1) pi / (4k+7), or
/// explicit angles (2k+2 of them, distinct modulo the pi/2 degeneracies).
QubitPairFamily build_qubit_pair_family(int k);
QubitPairFamily build_qubit_pair_family(int k, const std::vector<double>& angles);

} // namespace upb
