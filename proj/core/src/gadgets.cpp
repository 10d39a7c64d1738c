#include "upb/gadgets.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "upb/graphs.hpp"
#include "upb/numerics.hpp"
#include "upb/verifier.hpp"

namespace upb {

CVector QubitPairFamily::state(int i) const {
    const CVector& a = factors.at(i)[0];
    const CVector& c = factors.at(i)[1];
    CVector out(4);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) out(2 * x + y) = a(x) * c(y);
    return out;
}

std::vector<std::pair<int, int>> lemma1_zero_pattern(int d, int b) {
    if (b < 0 || d < 4 + 2 * b) throw DomainError("lemma1 pattern needs b >= 0 and d >= 4 + 2b");
    std::vector<std::pair<int, int>> pattern;
    pattern.reserve(static_cast<std::size_t>(b + 1) * (d - b));
    for (int j = 0; j < d - b; ++j)
        for (int ell = 0; ell <= b; ++ell) pattern.emplace_back((j + ell) % (d - b), j);
    return pattern;
}

namespace {

void throw_if_failed(const Certificate& cert, const std::string& what) {
    if (!cert.passed()) throw CertificationError(what + ": " + cert.summary());
}

} // namespace

Lemma1Matrix build_U_fourier(int d, bool certify) {
    if (d < 4) throw DomainError("build_U_fourier needs d >= 4");

    CMatrix u = CMatrix::Zero(d, d);

    // Rank-two border block from the +1/-1 eigenvalue pair.
    const double border = 1.0 / std::sqrt(static_cast<double>(d - 1));
    for (int t = 1; t < d; ++t) {
        u(0, t) = border;
        u(t, 0) = border;
    }

    // Remaining eigenvalues are the (d-2)-th roots of unity; eigenvectors
    // come from the (d-1)-point Fourier matrix with its first column dropped
    // and a zero row prepended.
    CVector eigvec(d);
    for (int j = 1; j <= d - 2; ++j) {
        const Complex lambda = root_of_unity(d - 2, j);
        eigvec(0) = 0.0;
        for (int t = 1; t < d; ++t)
            eigvec(t) = root_of_unity(d - 1, static_cast<std::int64_t>(j) * (t - 1)) /
                        std::sqrt(static_cast<double>(d - 1));
        u += lambda * (eigvec * eigvec.adjoint());
    }

    const double unitary_residual = (u.adjoint() * u - CMatrix::Identity(d, d)).norm();
    double diag_residual = 0.0;
    for (int t = 0; t < d; ++t) diag_residual = std::max(diag_residual, std::abs(u(t, t)));
    if (unitary_residual > 1e-10 || diag_residual > 1e-12) {
        std::ostringstream msg;
        msg << "build_U_fourier(" << d << "): unitary residual " << unitary_residual
            << ", diagonal residual " << diag_residual;
        throw CertificationError(msg.str());
    }

    Lemma1Matrix out{d, 0, std::move(u)};
    if (certify) throw_if_failed(verify_lemma1(out), "build_U_fourier");
    return out;
}

std::pair<CMatrix, double> u61_template() {
    // Unique real root of 3u^3 - 2u^2 - 3u - 3 in [1, 2]: bisection bracket,
    // then Newton polish to machine precision.
    const auto poly = [](double x) { return ((3.0 * x - 2.0) * x - 3.0) * x - 3.0; };
    const auto dpoly = [](double x) { return (9.0 * x - 4.0) * x - 3.0; };
    double lo = 1.0, hi = 2.0;
    for (int i = 0; i < 60 && hi - lo > 1e-14; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (poly(lo) * poly(mid) <= 0.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    double u10 = 0.5 * (lo + hi);
    for (int i = 0; i < 3; ++i) u10 -= poly(u10) / dpoly(u10);

    const double u1 = (u10 - 2.0) / (1.0 - u10);
    const double u2 = (u10 - 1.0) / (u10 - 2.0);
    const double u3 = (3.0 - 2.0 * u10) / (u10 - 2.0);
    const double u4 = u10 * (u10 - 2.0) / (2.0 * u10 - 3.0);
    const double u5 = -1.0 - u10;
    const double u6 = 1.0 / (1.0 + u10);
    const double u7 = -u10;
    const double u8 = u10 - 1.0;
    const double u9 = 1.0 / (1.0 - u10);

    CMatrix t(6, 5);
    t << 0.0, u1, 1.0, u2, 0.0,
        0.0, 0.0, u3, 1.0, u4,
        u5, 0.0, 0.0, u6, 1.0,
        1.0, u7, 0.0, 0.0, 1.0,
        u8, 1.0, u9, 0.0, 0.0,
        1.0, 1.0, 1.0, 1.0, u10;
    return {t, u10};
}

Lemma1Matrix build_U_6_1(bool certify) {
    auto [t, u10] = u61_template();
    (void)u10;
    for (int j = 0; j < 5; ++j) t.col(j) /= t.col(j).norm();
    Lemma1Matrix out{6, 1, std::move(t)};
    if (certify) throw_if_failed(verify_lemma1(out), "build_U_6_1");
    return out;
}

Lemma1Matrix build_U_general(int d, int b, std::uint64_t seed, const Tolerances& tol) {
    tol.validate();
    if (b < 0 || d < 4 + 2 * b) throw DomainError("build_U_general needs b >= 0 and d >= 4 + 2b");
    const auto pattern = lemma1_zero_pattern(d, b);
    const int cols = d - b;

    double best_pattern = -1.0, best_orth = -1.0;
    for (int attempt = 0; attempt < 25; ++attempt) {
        std::mt19937_64 rng(mix_seed(seed, attempt));
        CMatrix m(d, cols);
        for (int j = 0; j < cols; ++j)
            for (int i = 0; i < d; ++i) m(i, j) = complex_gaussian(rng);

        bool converged = false;
        try {
            for (int iter = 0; iter < 10'000; ++iter) {
                for (const auto& [i, j] : pattern) m(i, j) = 0.0;
                m = nearest_isometry(m, tol);
                double pattern_residual = 0.0;
                for (const auto& [i, j] : pattern)
                    pattern_residual = std::max(pattern_residual, std::abs(m(i, j)));
                if (pattern_residual < tol.fixpoint_tol) {
                    converged = true;
                    break;
                }
            }
        } catch (const DegenerateError&) {
            continue; // the projection hit a rank-deficient iterate; restart
        }

        for (const auto& [i, j] : pattern) m(i, j) = 0.0;
        const double pattern_residual = 0.0;
        const double orth_residual =
            (m.adjoint() * m - CMatrix::Identity(cols, cols)).norm();
        if (!converged || orth_residual > tol.orth_tol) {
            if (best_orth < 0.0 || orth_residual < best_orth) {
                best_orth = orth_residual;
                best_pattern = pattern_residual;
            }
            continue;
        }

        Lemma1Matrix cand{d, b, m};
        if (verify_lemma1(cand, tol).passed()) return cand;
    }
    std::ostringstream msg;
    msg << "build_U_general(" << d << ", " << b << "): no certified matrix in 25 attempts";
    throw ConstructionError(msg.str(), best_pattern, best_orth);
}

Lemma2Matrix build_V(int q, int r, int s, std::uint64_t seed, const Tolerances& tol) {
    tol.validate();
    if (r < 1 || s < 1) throw DomainError("build_V needs r, s >= 1");
    if (q < r + s) throw DomainError("build_V needs q >= r + s");

    for (int attempt = 0; attempt < 25; ++attempt) {
        std::mt19937_64 rng(mix_seed(seed, attempt));
        CMatrix v(r + 1, 2 * q);
        for (int j = 0; j < q; ++j) v.col(j) = random_unit_vector(r + 1, rng);
        bool filled = true;
        for (int m = 0; m < q; ++m) {
            // Column q+m must be orthogonal to columns (m - l) mod q for
            // s <= l < s+r; those generically span an r-dimensional space.
            std::vector<CVector> partners;
            partners.reserve(r);
            for (int ell = s; ell < s + r; ++ell)
                partners.push_back(v.col(((m - ell) % q + q) % q));
            try {
                v.col(q + m) = nullspace_vector(partners, r + 1, rng, tol);
            } catch (const NoSolutionError&) {
                filled = false;
                break;
            }
        }
        if (!filled) continue;

        Lemma2Matrix cand{q, r, s, std::move(v)};
        if (verify_lemma2(cand, tol).passed()) return cand;
    }
    std::ostringstream msg;
    msg << "build_V(" << q << ", " << r << ", " << s << "): no certified matrix in 25 attempts";
    throw ConstructionError(msg.str());
}

Lemma3Matrix build_W(int k, std::uint64_t seed, const Tolerances& tol) {
    tol.validate();
    if (k < 1) throw DomainError("build_W needs k >= 1");
    const OrthGraph x = graph_X(k);
    const int n = 4 * k + 4;
    const int dim = 4 * k + 1;

    for (int attempt = 0; attempt < 25; ++attempt) {
        std::mt19937_64 rng(mix_seed(seed, attempt));
        CMatrix w(dim, n);
        bool filled = true;
        for (int c = 0; c < n; ++c) {
            // Each vertex has 4k neighbors in the prism complement, so the
            // constraint set never spans C^{4k+1} during the sequential fill.
            std::vector<CVector> constraints;
            for (int prev = 0; prev < c; ++prev) {
                if (x.has_edge(prev, c)) constraints.push_back(w.col(prev));
            }
            try {
                w.col(c) = nullspace_vector(constraints, dim, rng, tol);
            } catch (const NoSolutionError&) {
                filled = false;
                break;
            }
        }
        if (!filled) continue;

        Lemma3Matrix cand{k, std::move(w)};
        if (verify_lemma3(cand, tol).passed()) return cand;
    }
    std::ostringstream msg;
    msg << "build_W(" << k << "): no certified matrix in 25 attempts";
    throw ConstructionError(msg.str());
}

namespace {

CVector basis_vector(double theta) {
    CVector v(2);
    v << std::cos(theta), std::sin(theta);
    return v;
}

CVector basis_perp(double theta) {
    CVector v(2);
    v << -std::sin(theta), std::cos(theta);
    return v;
}

} // namespace

QubitPairFamily build_qubit_pair_family(int k) {
    if (k < 1) throw DomainError("build_qubit_pair_family needs k >= 1");
    std::vector<double> angles(2 * k + 2);
    for (int j = 0; j < 2 * k + 2; ++j)
        angles[j] = (j + 1) * std::numbers::pi / (4 * k + 7);
    return build_qubit_pair_family(k, angles);
}

QubitPairFamily build_qubit_pair_family(int k, const std::vector<double>& angles) {
    if (k < 1) throw DomainError("build_qubit_pair_family needs k >= 1");
    const int m = 2 * k + 2;
    if (static_cast<int>(angles.size()) != m)
        throw DimensionError("build_qubit_pair_family needs 2k+2 angles");

    // Distinctness: between any two bases all cross overlaps must avoid 0
    // and 1 by margin 1e-6.
    constexpr double margin = 1e-6;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const double c = std::abs(std::cos(angles[i] - angles[j]));
            const double s = std::abs(std::sin(angles[i] - angles[j]));
            if (c < margin || c > 1.0 - margin || s < margin || s > 1.0 - margin)
                throw DegeneracyError("qubit bases too close to aligned or orthogonal");
        }
    }

    QubitPairFamily fam;
    fam.k = k;
    fam.angles = angles;
    fam.factors.resize(4 * k + 4);
    for (int j = 0; j <= k; ++j) {
        fam.factors[2 * j] = {basis_vector(angles[j]), basis_perp(angles[2 * j])};
        fam.factors[2 * j + 1] = {basis_perp(angles[j]), basis_vector(angles[(2 * j + 2) % m])};
        fam.factors[m + 2 * j] = {basis_perp(angles[j]), basis_perp(angles[2 * j + 1])};
        fam.factors[m + 2 * j + 1] = {basis_vector(angles[j]), basis_vector(angles[(2 * j + 3) % m])};
    }

    std::vector<CVector> states;
    states.reserve(fam.size());
    for (int i = 0; i < fam.size(); ++i) states.push_back(fam.state(i));
    if (!contains(orthogonality_graph_of(states), graph_Y(k)))
        throw CertificationError("qubit pair family misses a prism-graph orthogonality");
    return fam;
}

} // namespace upb
