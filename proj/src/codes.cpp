#include "chaincodes/codes.hpp"

#include <algorithm>

namespace chaincodes {

namespace {

void check_components(const CodeDescriptor& C) {
    if (!C.spec) throw ZeroInputError("code has no ambient spec");
    if (C.components.size() != C.spec->r())
        throw ArityMismatchError("component count does not match factor count");
}

// Rows of the F_{p^m}-span of the ambient ideal picked out by taking, for
// each component j, the span of gens_j embedded via the idempotent e_j.
Mat ambient_rows(const ConstacyclicSpec& spec,
                 const std::vector<std::vector<ChainPoly>>& gens_per_comp) {
    size_t N = spec.N;
    Mat rows;
    for (size_t j = 0; j < spec.r(); ++j) {
        const Component& K = spec.components[j];
        Mat span = ideal_span(gens_per_comp[j], K);
        for (const Vec& row : span) {
            ChainPoly elem = vec_to_chainpoly(row, K.ring.deg());
            ChainPoly emb = spec.ambient.mul(spec.idempotents[j], elem);
            rows.push_back(chainpoly_to_vec(emb, N));
        }
    }
    return rows;
}

}  // namespace

uint64_t code_size_exp(const CodeDescriptor& C) {
    check_components(C);
    uint64_t exp = 0;
    for (size_t j = 0; j < C.components.size(); ++j)
        exp += ideal_size_exp(C.components[j], C.spec->components[j]);
    return exp;
}

Mat code_span(const CodeDescriptor& C) {
    check_components(C);
    std::vector<std::vector<ChainPoly>> gens;
    for (size_t j = 0; j < C.components.size(); ++j)
        gens.push_back(ideal_generators(C.components[j], C.spec->components[j]));
    Mat rows = ambient_rows(*C.spec, gens);
    rref(*C.spec->field, rows);
    return rows;
}

ChainPoly ambient_star(const ChainPoly& a, size_t N) {
    auto rev = [N](const Poly& p) {
        Poly r;
        r.c.assign(N, 0);
        for (size_t i = 0; i < p.c.size(); ++i) r.c[N - 1 - i] = p.c[i];
        r.trim();
        return r;
    };
    return {rev(a.a0), rev(a.a1), rev(a.a2)};
}

CodeDescriptor dual_code(const CodeDescriptor& C) {
    check_components(C);
    const ConstacyclicSpec& spec = *C.spec;
    auto dual_spec = std::make_shared<ConstacyclicSpec>(dual_modulus(spec));

    std::vector<std::vector<ChainPoly>> ann_gens;
    for (size_t j = 0; j < C.components.size(); ++j)
        ann_gens.push_back(annihilator_generators(C.components[j], spec.components[j]));
    Mat ann_rows = ambient_rows(spec, ann_gens);

    CodeDescriptor dual;
    dual.spec = dual_spec;
    for (size_t j = 0; j < dual_spec->r(); ++j) {
        const Component& K = dual_spec->components[j];
        Mat rows;
        for (const Vec& row : ann_rows) {
            ChainPoly starred = ambient_star(vec_to_chainpoly(row, spec.N), spec.N);
            rows.push_back(chainpoly_to_vec(K.ring.reduce(starred), K.ring.deg()));
        }
        rref(K.field(), rows);
        dual.components.push_back(canonicalize_span(rows, K));
    }
    return dual;
}

IsodualVerdict is_isodual(const CodeDescriptor& C) {
    check_components(C);
    if (C.spec->r() != 1) return IsodualVerdict::Unknown;
    const Field& F = *C.spec->field;
    const IdealSpec& s = C.components[0];
    uint32_t ps = uint32_t(C.spec->ps);
    bool even = F.p() == 2;
    uint32_t half = ps / 2;  // 2^{s-1} when p = 2

    if (C.spec->lambda_case == LambdaCase::BetaNonzero) {
        if (!even) return IsodualVerdict::No;
        uint32_t ell = s.kind == IdealKind::Chain ? s.ell
                       : s.kind == IdealKind::Zero ? 3 * ps
                                                   : 0;
        return ell == 3 * half ? IsodualVerdict::Yes : IsodualVerdict::No;
    }

    switch (s.kind) {
        case IdealKind::Zero:
        case IdealKind::Unit:
        case IdealKind::TypeI:
            return IsodualVerdict::No;
        case IdealKind::TypeII:
            if (even && s.c == 0 && s.b == half) return IsodualVerdict::Yes;
            return IsodualVerdict::No;
        case IdealKind::TypeIII: {
            if (!even) return IsodualVerdict::No;
            if (s.b != half || s.c != ps - s.a) return IsodualVerdict::Unknown;
            if (C.spec->lambda_case == LambdaCase::BetaGammaZero)
                return (s.D1.is_zero() && s.V.is_zero()) ? IsodualVerdict::Yes
                                                         : IsodualVerdict::Unknown;
            // gamma != 0: the listed family carries the square root of gamma
            Poly root = Poly::constant(F.pow(C.spec->lambda.a2, F.q() / 2));
            bool match = s.theta == 0 && s.V == root && s.t1 == s.a - half && s.D1 == root;
            return match ? IsodualVerdict::Yes : IsodualVerdict::Unknown;
        }
        default:
            return IsodualVerdict::Unknown;
    }
}

std::vector<ChainPoly> expand_codewords(const CodeDescriptor& C, uint64_t cap_codewords_log2) {
    const Field& F = *C.spec->field;
    Mat span = code_span(C);
    size_t N = C.spec->N;
    size_t rank = span.size();

    // |C| = q^rank; enforce the cap exactly.
    uint64_t cap = uint64_t(1) << std::min<uint64_t>(cap_codewords_log2, 62);
    uint64_t count = 1;
    for (size_t i = 0; i < rank; ++i) {
        if (count > cap / F.q())
            throw CapExceededError("codeword count exceeds the expansion cap");
        count *= F.q();
    }

    // Precompute all scalar multiples of each basis row.
    std::vector<Mat> scaled(rank);
    for (size_t i = 0; i < rank; ++i) {
        scaled[i].resize(F.q());
        for (uint32_t sc = 0; sc < F.q(); ++sc) {
            Vec v(3 * N, 0);
            for (size_t j = 0; j < 3 * N; ++j) v[j] = F.mul(sc, span[i][j]);
            scaled[i][sc] = std::move(v);
        }
    }

    std::vector<ChainPoly> out;
    out.reserve(count);
    std::vector<uint32_t> digits(rank, 0);
    while (true) {
        Vec acc(3 * N, 0);
        for (size_t i = 0; i < rank; ++i) {
            if (digits[i] == 0) continue;
            const Vec& sv = scaled[i][digits[i]];
            for (size_t j = 0; j < 3 * N; ++j) acc[j] = F.add(acc[j], sv[j]);
        }
        out.push_back(vec_to_chainpoly(acc, N));
        size_t i = rank;
        bool done = true;
        while (i-- > 0) {
            if (++digits[i] < F.q()) {
                done = false;
                break;
            }
            digits[i] = 0;
        }
        if (rank == 0 || done) break;
    }
    return out;
}

}  // namespace chaincodes
