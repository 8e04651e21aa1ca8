// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Everything here is exact; brute-force referees come from the
// oracle module.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "chaincodes/oracle.hpp"
#include "chaincodes/serialize.hpp"

using namespace chaincodes;

namespace {

struct Failure {
    std::string detail;
};

using SpecPtr = std::shared_ptr<const ConstacyclicSpec>;

SpecPtr build(uint32_t p, uint32_t m, uint32_t n, uint32_t s, ChainElem lambda) {
    return std::make_shared<ConstacyclicSpec>(
        lift_factorization(std::make_shared<Field>(p, m), n, s, lambda));
}

const std::vector<ChainElem> kUnitCases = {{1, 1, 0}, {1, 0, 0}, {1, 0, 1}};

ChainPoly ambient_binomial(const ConstacyclicSpec& spec) {
    const Field& F = *spec.field;
    Poly xn = poly_shift(Poly::constant(1), spec.N);
    return {poly_sub(F, xn, Poly::constant(spec.lambda.a0)),
            Poly::constant(F.neg(spec.lambda.a1)), Poly::constant(F.neg(spec.lambda.a2))};
}

// ---- criterion 1: coefficient-exact factorization across the grid --------

bool criterion1(std::string& note) {
    size_t instances = 0;
    for (uint32_t p : {2u, 3u, 5u})
        for (uint32_t m : {1u, 2u})
            for (uint32_t n = 1; n <= 6; ++n) {
                if (n % p == 0) continue;
                for (uint32_t s : {1u, 2u})
                    for (ChainElem lambda : kUnitCases) {
                        SpecPtr spec = build(p, m, n, s, lambda);
                        const Field& F = *spec->field;
                        ChainPoly prod = ChainPoly::one();
                        for (const ChainPoly& k : unreduced_factors(*spec))
                            prod = cpoly_mul(F, prod, k);
                        if (prod != ambient_binomial(*spec)) {
                            note = "product mismatch at p=" + std::to_string(p);
                            return false;
                        }
                        for (size_t j = 0; j + 1 < spec->r(); ++j) {
                            Poly suffix = Poly::constant(1);
                            for (size_t i = j + 1; i < spec->r(); ++i)
                                suffix = poly_mul(F, suffix,
                                                  poly_pow(F, spec->factors[i].f, spec->ps));
                            Poly fj = poly_pow(F, spec->factors[j].f, spec->ps);
                            Poly lhs = poly_add(F, poly_mul(F, spec->factors[j].v, fj),
                                                poly_mul(F, spec->factors[j].w, suffix));
                            if (lhs != Poly::constant(1)) {
                                note = "Bezout certificate failed at p=" + std::to_string(p);
                                return false;
                            }
                        }
                        ++instances;
                    }
            }
    note = std::to_string(instances) + " instances";
    return true;
}

// ---- criterion 2: seven chain ideals, formula and brute force ------------

bool criterion2(std::string& note) {
    SpecPtr spec = build(2, 1, 1, 1, {1, 1, 0});
    const Component& K = spec->components[0];
    auto ideals = enumerate_ideals(K);
    auto bf = enumerate_ideals_bf(K);
    if (ideals.size() != 7 || bf.size() != 7) {
        note = "counts " + std::to_string(ideals.size()) + "/" + std::to_string(bf.size());
        return false;
    }
    std::vector<Mat> formula;
    for (const IdealSpec& I : ideals) formula.push_back(ideal_span(ideal_generators(I, K), K));
    std::sort(formula.begin(), formula.end());
    note = "7 ideals";
    return formula == bf;
}

// ---- criteria 3 and 4: taxonomy completeness and algebraic identities ----

const std::vector<std::tuple<uint32_t, uint32_t, uint32_t>> kSmallRingGrid = {
    // (p, n, s) with every component ring small enough to exhaust
    {2, 1, 1}, {2, 1, 2}, {2, 3, 1}, {3, 1, 1}, {3, 2, 1},
};

bool criterion3(std::string& note) {
    size_t rings = 0;
    for (auto [p, n, s] : kSmallRingGrid)
        for (ChainElem lambda : kUnitCases) {
            SpecPtr spec = build(p, 1, n, s, lambda);
            for (const Component& K : spec->components) {
                auto ideals = enumerate_ideals(K, 15);
                auto bf = enumerate_ideals_bf(K, 15);
                std::vector<Mat> formula;
                for (const IdealSpec& I : ideals)
                    formula.push_back(ideal_span(ideal_generators(I, K), K));
                std::sort(formula.begin(), formula.end());
                if (formula.size() != ideals.size()) {
                    note = "duplicate fingerprints in the taxonomy";
                    return false;
                }
                if (formula != bf) {
                    note = "fingerprint sets differ at p=" + std::to_string(p) +
                           " n=" + std::to_string(n) + " s=" + std::to_string(s);
                    return false;
                }
                ++rings;
            }
        }
    note = std::to_string(rings) + " component rings";
    return true;
}

bool criterion4(std::string& note) {
    size_t checked = 0;
    for (auto [p, n, s] : kSmallRingGrid)
        for (ChainElem lambda : kUnitCases) {
            SpecPtr spec = build(p, 1, n, s, lambda);
            for (const Component& K : spec->components) {
                uint64_t ring_exp = 3ull * K.field().m() * K.d * K.ps;
                for (const IdealSpec& I : enumerate_ideals(K, 15)) {
                    Mat span = ideal_span(ideal_generators(I, K), K);
                    if (uint64_t(span.size()) != ideal_size_exp(I, K)) {
                        note = "size formula disagrees with the span rank";
                        return false;
                    }
                    IdealSpec ann = annihilator(I, K);
                    if (ideal_size_exp(I, K) + ideal_size_exp(ann, K) != ring_exp) {
                        note = "|I| * |ann I| != |K|";
                        return false;
                    }
                    for (const ChainPoly& g : ideal_generators(I, K))
                        for (const ChainPoly& h : annihilator_generators(I, K))
                            if (!K.ring.mul(g, h).is_zero()) {
                                note = "I * ann(I) != 0";
                                return false;
                            }
                    if (annihilator(ann, K) != I) {
                        note = "ann(ann(I)) != I";
                        return false;
                    }
                    ++checked;
                }
            }
        }
    note = std::to_string(checked) + " ideals";
    return true;
}

// ---- criterion 5: duals against the inner-product kernel -----------------

bool criterion5(std::string& note) {
    size_t codes = 0, set_checked = 0;
    std::vector<std::tuple<uint32_t, uint32_t, uint32_t>> grid = {
        {2, 1, 1}, {2, 3, 1}, {3, 2, 1}};
    for (auto [p, n, s] : grid)
        for (ChainElem lambda : kUnitCases) {
            SpecPtr spec = build(p, 1, n, s, lambda);
            const Field& F = *spec->field;
            std::vector<std::vector<IdealSpec>> per_comp;
            for (const Component& K : spec->components)
                per_comp.push_back(enumerate_ideals(K, 15));
            std::vector<size_t> idx(spec->r(), 0);
            while (true) {
                CodeDescriptor C;
                C.spec = spec;
                for (size_t j = 0; j < spec->r(); ++j) C.components.push_back(per_comp[j][idx[j]]);
                uint64_t exp = code_size_exp(C);
                double bits = double(exp) * std::log2(double(p));
                if (bits <= 12.0) {
                    Mat span = code_span(C);
                    std::vector<ChainPoly> basis;
                    for (const Vec& row : span) basis.push_back(vec_to_chainpoly(row, spec->N));
                    CodeDescriptor D = dual_code(C);
                    if (dual_bf_span(F, basis, spec->N) != code_span(D)) {
                        note = "formula dual differs from the kernel dual";
                        return false;
                    }
                    if (code_size_exp(C) + code_size_exp(D) != 3ull * spec->N) {
                        note = "dual size identity failed";
                        return false;
                    }
                    if (bits <= 8.0 && 3.0 * double(spec->N) * std::log2(double(p)) <= 16.0) {
                        auto lhs = dual_bf(F, expand_codewords(C, 12), spec->N);
                        auto rhs = expand_codewords(D, 16);
                        std::vector<Vec> a, b;
                        for (const ChainPoly& w : lhs) a.push_back(chainpoly_to_vec(w, spec->N));
                        for (const ChainPoly& w : rhs) b.push_back(chainpoly_to_vec(w, spec->N));
                        std::sort(a.begin(), a.end());
                        std::sort(b.begin(), b.end());
                        if (a != b) {
                            note = "dual codeword sets differ";
                            return false;
                        }
                        ++set_checked;
                    }
                    ++codes;
                }
                size_t j = spec->r();
                bool done = true;
                while (j-- > 0) {
                    if (++idx[j] < per_comp[j].size()) {
                        done = false;
                        break;
                    }
                    idx[j] = 0;
                }
                if (done) break;
            }
        }
    note = std::to_string(codes) + " codes, " + std::to_string(set_checked) + " full set checks";
    return true;
}

// ---- criterion 6: distance formulas against exhaustive weights -----------

uint64_t field_min_weight(const Field& F, uint32_t upsilon, uint32_t ps) {
    // minimum Hamming weight of <(x-1)^upsilon> in F[x]/(x^{ps} - 1)
    Poly mod = poly_sub(F, poly_shift(Poly::constant(1), ps), Poly::constant(1));
    Poly fv = poly_pow(F, Poly({F.neg(1), 1}), upsilon);
    size_t dim = ps - upsilon;
    std::vector<Poly> basis;
    for (size_t i = 0; i < dim; ++i) basis.push_back(poly_mod(F, poly_shift(fv, i), mod));
    uint64_t best = 0;  // 0 encodes "no nonzero codeword"
    std::vector<uint32_t> digits(dim, 0);
    while (true) {
        size_t i = dim;
        bool done = true;
        while (i-- > 0) {
            if (++digits[i] < F.q()) {
                done = false;
                break;
            }
            digits[i] = 0;
        }
        if (done) break;
        Poly w;
        for (size_t k = 0; k < dim; ++k)
            if (digits[k]) w = poly_add(F, w, poly_scale(F, basis[k], digits[k]));
        uint64_t wt = 0;
        for (uint32_t cc : w.c)
            if (cc) ++wt;
        if (best == 0 || wt < best) best = wt;
    }
    return best;
}

bool criterion6(std::string& note) {
    // field-case bands measured directly
    for (uint32_t p : {2u, 3u}) {
        Field F(p, 1);
        for (uint32_t s : {1u, 2u}) {
            uint32_t ps = 1;
            for (uint32_t i = 0; i < s; ++i) ps *= p;
            for (uint32_t v = 1; v < ps; ++v)
                if (field_min_weight(F, v, ps) != hamming_distance_field(v, p, s)) {
                    note = "field band wrong at p=" + std::to_string(p) + " v=" + std::to_string(v);
                    return false;
                }
        }
    }

    size_t codes = 0;
    auto check_code = [&](const CodeDescriptor& C) -> bool {
        uint64_t exp = code_size_exp(C);
        uint32_t p = C.spec->field->p();
        if (double(exp) * std::log2(double(p)) > 16.0) return true;
        BruteWeights bw = min_weights_bf(expand_codewords(C, 16), C.spec->N, 16);
        if (bw.d_h != hamming_distance(C)) return false;
        if (bw.d_rt != rt_distance(C)) return false;
        WeightDistribution wd = rt_weight_distribution(C);
        if (wd.A != bw.dist.A) return false;
        ++codes;
        return true;
    };

    // rings small enough to enumerate outright
    for (auto [p, n, s] : std::vector<std::tuple<uint32_t, uint32_t, uint32_t>>{
             {2, 1, 1}, {2, 1, 2}, {3, 1, 1}})
        for (ChainElem lambda : {ChainElem{1, 0, 0}, ChainElem{1, 0, 1}}) {
            SpecPtr spec = build(p, 1, n, s, lambda);
            for (const IdealSpec& I : enumerate_ideals(spec->components[0], 15))
                if (!check_code({spec, {I}})) {
                    note = "distance mismatch at p=" + std::to_string(p) + " s=" + std::to_string(s);
                    return false;
                }
        }

    // larger rings: handpicked families inside the codeword cap
    for (auto [p, n, s, a0] : std::vector<std::tuple<uint32_t, uint32_t, uint32_t, uint32_t>>{
             {3, 1, 2, 1}, {3, 2, 1, 2}, {3, 2, 2, 2}})
        for (ChainElem lambda : {ChainElem{a0, 0, 0}, ChainElem{a0, 0, 1}}) {
            SpecPtr spec = build(p, 1, n, s, lambda);
            const Component& K = spec->components[0];
            uint32_t ps = K.ps;
            std::vector<IdealSpec> picks;
            for (uint32_t c = 0; c <= ps; ++c) {
                if (c == ps) {
                    picks.push_back({IdealKind::Zero});
                    continue;
                }
                IdealSpec t1;
                t1.kind = IdealKind::TypeI;
                t1.a = ps;
                t1.b = ps;
                t1.c = c;
                picks.push_back(t1);
            }
            for (uint32_t b = 0; b < ps; ++b)
                for (uint32_t c = 0; c <= b; ++c) {
                    IdealSpec t2;
                    t2.kind = IdealKind::TypeII;
                    t2.a = ps;
                    t2.b = b;
                    t2.c = c;
                    t2.t = c;  // zero-unit convention
                    picks.push_back(t2);
                }
            for (const IdealSpec& I : picks)
                if (!check_code({spec, {I}})) {
                    note = "distance mismatch in the large-ring family p=" + std::to_string(p);
                    return false;
                }
        }
    note = std::to_string(codes) + " codes measured";
    return true;
}

// ---- criterion 7: isodual characterization -------------------------------

bool criterion7(std::string& note) {
    size_t yes_checked = 0;
    // p = 2: every Yes verdict must coincide with its own annihilator
    for (auto [n, s] : std::vector<std::pair<uint32_t, uint32_t>>{{1, 1}, {1, 2}})
        for (ChainElem lambda : kUnitCases) {
            SpecPtr spec = build(2, 1, n, s, lambda);
            const Component& K = spec->components[0];
            for (const IdealSpec& I : enumerate_ideals(K, 15)) {
                CodeDescriptor C{spec, {I}};
                if (is_isodual(C) == IsodualVerdict::Yes) {
                    if (annihilator(I, K) != I) {
                        note = "claimed-isodual code is not self-annihilating";
                        return false;
                    }
                    ++yes_checked;
                }
            }
        }
    if (yes_checked == 0) {
        note = "no isodual codes found for p = 2";
        return false;
    }
    // p = 3: no isodual code in any case
    for (ChainElem lambda : kUnitCases) {
        SpecPtr spec = build(3, 1, 1, 1, lambda);
        for (const IdealSpec& I : enumerate_ideals(spec->components[0], 15))
            if (is_isodual({spec, {I}}) == IsodualVerdict::Yes) {
                note = "isodual verdict for p = 3";
                return false;
            }
    }
    note = std::to_string(yes_checked) + " isodual codes verified self-dual";
    return true;
}

// ---- criterion 8: byte-identical verify runs -----------------------------

std::string sibling_path(const char* argv0, const std::string& name) {
    std::string self(argv0);
    char buf[4096];
    ssize_t len = readlink("/proc/self/exe", buf, sizeof(buf) - 1);
    if (len > 0) {
        buf[len] = 0;
        self = buf;
    }
    size_t slash = self.find_last_of('/');
    return (slash == std::string::npos ? std::string(".") : self.substr(0, slash)) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

bool criterion8(std::string& note, const char* argv0) {
    std::string cli = sibling_path(argv0, "chaincodes_cli");
    std::string base = cli + " verify --p 2 3 --m 1 --n 1 2 --s 1 --case all --out ";
    if (std::system((base + "/tmp/acc_verify_a.jsonl").c_str()) != 0 ||
        std::system((base + "/tmp/acc_verify_b.jsonl").c_str()) != 0) {
        note = "verify run failed";
        return false;
    }
    std::string a = slurp("/tmp/acc_verify_a.jsonl");
    std::string b = slurp("/tmp/acc_verify_b.jsonl");
    if (a.empty() || a != b) {
        note = "reports differ or are empty";
        return false;
    }
    note = std::to_string(a.size()) + " bytes, identical";
    return true;
}

}  // namespace

int main(int, char** argv) {
    int failures = 0;
    auto report = [&](int i, const char* name, bool ok, const std::string& note) {
        std::printf("%s  criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", i, name, note.c_str());
        if (!ok) ++failures;
    };

    std::string note;
    report(1, "coefficient-exact factorization and Bezout certificates", criterion1(note), note);
    report(2, "seven chain-case ideals", criterion2(note), note);
    report(3, "taxonomy completeness vs brute force", criterion3(note), note);
    report(4, "size and annihilator identities", criterion4(note), note);
    report(5, "dual correctness vs inner-product kernel", criterion5(note), note);
    report(6, "distance formulas vs exhaustive weights", criterion6(note), note);
    report(7, "isodual characterization", criterion7(note), note);
    report(8, "byte-identical verify runs", criterion8(note, argv[0]), note);

    return failures == 0 ? 0 : 1;
}
