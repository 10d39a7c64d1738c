#include "upb/numerics.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/SVD>
#include <boost/multiprecision/cpp_int.hpp>

namespace upb {

Complex inner_product(const CVector& a, const CVector& b) {
    if (a.size() != b.size() || a.size() == 0)
        throw DimensionError("inner_product: vectors must have equal positive length");
    return a.dot(b); // Eigen conjugates the first argument
}

int rank(const CMatrix& m, const Tolerances& tol) {
    tol.validate();
    Eigen::JacobiSVD<CMatrix> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    const double largest = sv(0);
    if (largest == 0.0) return 0;
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > tol.rank_tol * largest) ++r;
    }
    return r;
}

bool nonsingular(const CMatrix& m, const Tolerances& tol) {
    if (m.rows() != m.cols()) throw DimensionError("nonsingular: matrix must be square");
    return rank(m, tol) == m.rows();
}

std::pair<double, double> singular_value_range(const CMatrix& m) {
    Eigen::JacobiSVD<CMatrix> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return {0.0, 0.0};
    return {sv(sv.size() - 1), sv(0)};
}

double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Complex complex_gaussian(std::mt19937_64& rng) {
    // Box-Muller; u1 bounded away from zero so the log is finite.
    double u1 = 0.0;
    do {
        u1 = uniform_unit(rng);
    } while (u1 <= 0.0);
    const double u2 = uniform_unit(rng);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    // Real and imaginary parts are independent N(0, 1/2) up to scale.
    return {radius * std::cos(angle) / std::numbers::sqrt2,
            radius * std::sin(angle) / std::numbers::sqrt2};
}

CVector random_unit_vector(int dim, std::mt19937_64& rng) {
    if (dim < 1) throw DomainError("random_unit_vector: dimension must be positive");
    CVector v(dim);
    double norm2 = 0.0;
    do {
        for (int i = 0; i < dim; ++i) v(i) = complex_gaussian(rng);
        norm2 = v.squaredNorm();
    } while (norm2 < 1e-12);
    return v / std::sqrt(norm2);
}

namespace {

// First coordinate of magnitude above the cutoff is rotated to be
// real-positive; makes nullspace sampling reproducible up to bit level.
CVector fix_phase(CVector v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double mag = std::abs(v(i));
        if (mag > 1e-12) {
            v *= std::conj(v(i)) / mag;
            break;
        }
    }
    return v;
}

} // namespace

CVector nullspace_vector(const std::vector<CVector>& rows, int dim, std::mt19937_64& rng,
                         const Tolerances& tol) {
    tol.validate();
    if (dim < 1) throw DimensionError("nullspace_vector: dimension must be positive");
    for (const CVector& r : rows) {
        if (r.size() != dim) throw DimensionError("nullspace_vector: row length mismatch");
    }
    if (rows.empty()) return fix_phase(random_unit_vector(dim, rng));

    CMatrix a(rows.size(), dim);
    for (std::size_t i = 0; i < rows.size(); ++i) a.row(i) = rows[i].adjoint();

    Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double largest = sv.size() > 0 ? sv(0) : 0.0;
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (largest > 0.0 && sv(i) > tol.rank_tol * largest) ++r;
    }
    const int null_dim = dim - r;
    if (null_dim <= 0) throw NoSolutionError("nullspace_vector: constraint rows span the full space");

    const CMatrix basis = svd.matrixV().rightCols(null_dim);
    CVector coeffs(null_dim);
    for (int i = 0; i < null_dim; ++i) coeffs(i) = complex_gaussian(rng);
    CVector v = basis * coeffs;
    const double norm = v.norm();
    if (norm < 1e-12) return nullspace_vector(rows, dim, rng, tol); // measure-zero redraw
    return fix_phase(v / norm);
}

CVector nullspace_vector(const CMatrix& row_matrix, std::uint64_t seed, const Tolerances& tol) {
    std::vector<CVector> rows;
    rows.reserve(row_matrix.rows());
    for (Eigen::Index i = 0; i < row_matrix.rows(); ++i) rows.push_back(row_matrix.row(i).transpose());
    std::mt19937_64 rng(seed);
    return nullspace_vector(rows, static_cast<int>(row_matrix.cols()), rng, tol);
}

CMatrix nearest_isometry(const CMatrix& m, const Tolerances& tol) {
    tol.validate();
    if (m.rows() < m.cols()) throw DimensionError("nearest_isometry: need rows >= cols");
    Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0 || sv(sv.size() - 1) <= tol.rank_tol * sv(0))
        throw DegenerateError("nearest_isometry: input is rank-deficient");
    return svd.matrixU() * svd.matrixV().adjoint();
}

Complex root_of_unity(std::int64_t k, std::int64_t power) {
    if (k < 1) throw DomainError("root_of_unity: k must be at least 1");
    const std::int64_t reduced = ((power % k) + k) % k;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(reduced) / static_cast<double>(k);
    return {std::cos(angle), std::sin(angle)};
}

bool exact_nonsingular_int(const IMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("exact_nonsingular_int: matrix must be square");
    using boost::multiprecision::cpp_int;
    const int n = static_cast<int>(m.rows());
    std::vector<std::vector<cpp_int>> a(n, std::vector<cpp_int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m(i, j);

    // Bareiss fraction-free elimination; row swaps only change the sign.
    cpp_int prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i) {
                if (a[i][k] != 0) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) return false;
            std::swap(a[k], a[pivot]);
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return a[n - 1][n - 1] != 0;
}

bool is_integral(const CMatrix& m, double eps) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            const Complex z = m(i, j);
            if (std::abs(z.imag()) > eps) return false;
            if (std::abs(z.real() - std::round(z.real())) > eps) return false;
        }
    }
    return true;
}

IMatrix to_integer(const CMatrix& m) {
    IMatrix out(m.rows(), m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            out(i, j) = static_cast<std::int64_t>(std::llround(m(i, j).real()));
    return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace upb
