#include "upb/assembler.hpp"

#include <algorithm>
#include <sstream>

#include "upb/numerics.hpp"
#include "upb/verifier.hpp"

namespace upb {

Theorem1Plan plan_theorem1(const SystemSpec& spec) {
    const Theorem1Applicability check = theorem1_applicable(spec);
    if (!check.applicable)
        throw DomainError("plan_theorem1: hypotheses fail: " + check.diagnostic);

    const int p = spec.parties();
    const int dp = spec.dim(p - 1);
    long prefix = 0;
    for (int j = 0; j + 1 < p; ++j) prefix += spec.dim(j) - 1;
    // The excluded parity case forces f_N odd, so the gap is even.
    const int b = static_cast<int>(((dp - 1) - prefix) / 2);

    Theorem1Plan plan{spec, b, dp - b, {}, {}};
    int shift = b + 1;
    for (int j = 0; j + 1 < p; ++j) {
        plan.regularities.push_back(spec.dim(j) - 1);
        plan.shifts.push_back(shift);
        shift += spec.dim(j) - 1;
    }
    return plan;
}

namespace {

void verify_or_throw(const ProductBasis& pb, const Tolerances& tol, const char* builder) {
    const Certificate cert = verify_upb(pb, tol);
    if (cert.outcome == Outcome::Fail) {
        std::ostringstream msg;
        msg << builder << ": built basis failed verification\n" << cert.summary();
        throw VerificationError(msg.str());
    }
}

} // namespace

ProductBasis build_theorem1_upb(const SystemSpec& spec, std::uint64_t seed,
                                const Theorem1Options& options, const Tolerances& tol) {
    tol.validate();
    Theorem1Plan plan = plan_theorem1(spec);
    if (options.shifts.has_value()) {
        if (options.shifts->size() != plan.shifts.size())
            throw DimensionError("build_theorem1_upb: shift override has wrong length");
        plan.shifts = *options.shifts;
    }

    const int p = spec.parties();
    const int dp = spec.dim(p - 1);
    const int q = plan.q;

    // Party p: standard basis for the v's, Lemma1Matrix columns for the w's.
    Lemma1Matrix top;
    if (options.u_override.has_value()) {
        top = *options.u_override;
        if (top.d != dp || top.b != plan.b)
            throw DimensionError("build_theorem1_upb: Lemma1Matrix override has wrong parameters");
    } else if (plan.b == 0) {
        top = build_U_fourier(dp);
    } else if (dp == 6 && plan.b == 1) {
        top = build_U_6_1();
    } else {
        top = build_U_general(dp, plan.b, mix_seed(seed, 0), tol);
    }

    // Parties j < p: the two halves of a band-orthogonality matrix.
    std::vector<Lemma2Matrix> layers;
    for (int j = 0; j + 1 < p; ++j) {
        if (auto it = options.layer_overrides.find(j); it != options.layer_overrides.end()) {
            const Lemma2Matrix& given = it->second;
            if (given.q != q || given.r != plan.regularities[j] || given.s != plan.shifts[j])
                throw DimensionError("build_theorem1_upb: layer override has wrong parameters");
            layers.push_back(given);
        } else {
            layers.push_back(
                build_V(q, plan.regularities[j], plan.shifts[j], mix_seed(seed, 1 + j), tol));
        }
    }

    ProductBasis pb;
    pb.dims = spec.caller_dims();
    pb.construction = "theorem1";
    pb.seed = seed;
    pb.b = plan.b;
    for (int half = 0; half < 2; ++half) {
        for (int i = 0; i < q; ++i) {
            ProductState state;
            state.factors.resize(p);
            for (int j = 0; j + 1 < p; ++j) {
                const CVector col = layers[j].V.col(half * q + i);
                state.factors[spec.caller_index(j)] = col.normalized();
            }
            CVector local(dp);
            if (half == 0) {
                local.setZero();
                local(i) = 1.0;
            } else {
                // Rotating the columns by b aligns the zero pattern with the
                // cross band of graph_D(d_p, b), so w_j is orthogonal to the
                // basis states v_{j-b}..v_j and the layers tile the rest.
                local = top.U.col(((i - plan.b) % q + q) % q).normalized();
            }
            state.factors[spec.caller_index(p - 1)] = local;
            pb.states.push_back(std::move(state));
        }
    }

    verify_or_throw(pb, tol, "build_theorem1_upb");
    return pb;
}

ProductBasis build_theorem2_upb(int k, std::uint64_t seed, const Tolerances& tol) {
    tol.validate();
    if (k < 1) throw DomainError("build_theorem2_upb needs k >= 1");
    const QubitPairFamily family = build_qubit_pair_family(k);
    const Lemma3Matrix w = build_W(k, seed, tol);

    ProductBasis pb;
    pb.dims = {2, 2, 4 * k + 1};
    pb.construction = "theorem2";
    pb.seed = seed;
    const int m = 2 * k + 2;
    for (int i = 0; i < 2 * m; ++i) {
        ProductState state;
        state.factors.push_back(family.factors[i][0]);
        state.factors.push_back(family.factors[i][1]);
        const CVector third = i < m ? w.v_column(i) : w.w_column(i - m);
        state.factors.push_back(third.normalized());
        pb.states.push_back(std::move(state));
    }

    verify_or_throw(pb, tol, "build_theorem2_upb");
    return pb;
}

ProductBasis build_minimal_upb(const SystemSpec& spec, std::uint64_t seed, const Tolerances& tol) {
    if (theorem1_applicable(spec).applicable) return build_theorem1_upb(spec, seed, {}, tol);
    if (const int k = theorem2_parameter(spec); k >= 1) {
        ProductBasis pb = build_theorem2_upb(k, seed, tol);
        // Restore the caller's party order.
        ProductBasis out;
        out.dims = spec.caller_dims();
        out.construction = pb.construction;
        out.seed = pb.seed;
        out.b = pb.b;
        for (ProductState& s : pb.states) {
            ProductState reordered;
            reordered.factors.resize(3);
            for (int j = 0; j < 3; ++j) reordered.factors[spec.caller_index(j)] = s.factors[j];
            out.states.push_back(std::move(reordered));
        }
        return out;
    }

    const BoundReport report = f_m(spec);
    std::ostringstream msg;
    msg << "no construction covers dimensions (";
    for (std::size_t i = 0; i < spec.caller_dims().size(); ++i)
        msg << (i ? ", " : "") << spec.caller_dims()[i];
    msg << "): ";
    if (report.rule == Rule::Unknown) {
        const auto& dims = spec.dims();
        const int p = spec.parties();
        if (p == 3 && dims[0] == 2 && dims[1] == 2 && dims[2] % 4 == 3) {
            msg << "the minimum size for (2, 2, 4k-1) with k >= 2 is an open problem";
        } else if (std::all_of(dims.begin(), dims.end(), [](int d) { return d == 2; }) &&
                   p % 4 == 0) {
            msg << "the minimum size for 4k qubit parties is an open problem";
        } else {
            msg << "the minimum size here is an open problem (only the lower bound "
                << report.f_m_value << " is known)";
        }
    } else {
        msg << "the minimum size " << report.f_m_value << " is known (rule "
            << rule_name(report.rule) << ") but its construction is out of scope";
    }
    throw UnsupportedCaseError(msg.str());
}

} // namespace upb
