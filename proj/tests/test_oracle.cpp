#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "chaincodes/oracle.hpp"
#include "chaincodes/serialize.hpp"
#include "test_util.hpp"

using namespace chaincodes;
using namespace chaincodes::testutil;

TEST_CASE("brute-force ideal enumeration matches the chain taxonomy") {
    auto spec = make_spec(2, 1, 1, 1, ChainElem{1, 1, 0});  // |K| = 64
    const Component& K = spec->components[0];
    auto bf = enumerate_ideals_bf(K);
    REQUIRE(bf.size() == 7);

    std::vector<Mat> formula;
    for (const IdealSpec& I : enumerate_ideals(K)) formula.push_back(ideal_span(ideal_generators(I, K), K));
    std::sort(formula.begin(), formula.end());
    CHECK(bf == formula);
}

TEST_CASE("brute-force enumeration agrees in the beta = 0 cases") {
    for (ChainElem lambda : {ChainElem{1, 0, 0}, ChainElem{1, 0, 1}}) {
        auto spec = make_spec(2, 1, 1, 1, lambda);
        const Component& K = spec->components[0];
        auto bf = enumerate_ideals_bf(K);
        std::vector<Mat> formula;
        for (const IdealSpec& I : enumerate_ideals(K))
            formula.push_back(ideal_span(ideal_generators(I, K), K));
        std::sort(formula.begin(), formula.end());
        CHECK(bf == formula);
    }
}

TEST_CASE("brute-force enumeration cap") {
    auto spec = make_spec(3, 1, 1, 2, ChainElem{1, 0, 0});
    CHECK_THROWS_AS(enumerate_ideals_bf(spec->components[0], 12), CapExceededError);
}

TEST_CASE("exhaustive weights of tiny codes") {
    auto spec = make_spec(2, 1, 1, 1, ChainElem{1, 0, 0});

    BruteWeights zero = min_weights_bf({ChainPoly::zero()}, 2);
    CHECK(zero.d_h == 0);
    CHECK(zero.d_rt == 0);
    CHECK(zero.dist.A[0] == 1);

    CodeDescriptor C = make_code(spec, {type1_ideal(0, 2)});
    BruteWeights bw = min_weights_bf(expand_codewords(C), 2);
    CHECK(bw.d_h == 1);
    CHECK(bw.d_rt == 1);
    REQUIRE(bw.dist.A.size() == 3);
    CHECK(bw.dist.A[0] == 1);
    CHECK(bw.dist.A[1] == 1);
    CHECK(bw.dist.A[2] == 2);
}

TEST_CASE("repetition-style field code has distance 4") {
    // <(x+1)^3> inside the s = 2 cyclic ambient, carried as a u^2 torsion code
    auto spec = make_spec(2, 1, 1, 2, ChainElem{1, 0, 0});
    CodeDescriptor C = make_code(spec, {type1_ideal(3, 4)});
    BruteWeights bw = min_weights_bf(expand_codewords(C), 4);
    CHECK(bw.d_h == 4);  // two codewords: 0 and u^2(1+x+x^2+x^3)
    CHECK(bw.d_h == hamming_distance(C));
    CHECK(bw.d_rt == rt_distance(C));
}

TEST_CASE("module-level dual of the u^2 multiples") {
    // words u^2 w for all w in R^4: the orthogonal set is everything with
    // u-divisible coordinates, 4^4 = 256 vectors
    Field F(2, 1);
    std::vector<ChainPoly> words;
    for (uint32_t bits = 0; bits < 16; ++bits) {
        std::vector<uint32_t> c;
        for (int j = 0; j < 4; ++j) c.push_back((bits >> j) & 1);
        words.push_back(ChainPoly{Poly(), Poly(), Poly(std::move(c))});
    }
    auto dual_words = dual_bf(F, words, 4);
    CHECK(dual_words.size() == 256);
    for (const ChainPoly& w : dual_words) CHECK(w.a0.is_zero());
}

TEST_CASE("exhaustive dual of the u^2 torsion code") {
    auto spec = make_spec(2, 1, 1, 1, ChainElem{1, 0, 0});
    const Field& F = *spec->field;
    CodeDescriptor C = make_code(spec, {type1_ideal(0, 2)});
    auto dual_words = dual_bf(F, expand_codewords(C), 2);
    CHECK(dual_words.size() == 16);  // <u> inside the length-2 ambient

    CodeDescriptor D = dual_code(C);
    auto formula_words = expand_codewords(D);
    std::vector<Vec> lhs, rhs;
    for (const ChainPoly& w : dual_words) lhs.push_back(chainpoly_to_vec(w, 2));
    for (const ChainPoly& w : formula_words) rhs.push_back(chainpoly_to_vec(w, 2));
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    CHECK(lhs == rhs);
}

TEST_CASE("kernel-based dual span agrees with the scan") {
    auto spec = make_spec(3, 1, 1, 1, ChainElem{1, 0, 1});
    const Field& F = *spec->field;
    for (const IdealSpec& I : enumerate_ideals(spec->components[0])) {
        CodeDescriptor C = make_code(spec, {I});
        Mat span = code_span(C);
        std::vector<ChainPoly> basis;
        for (const Vec& row : span) basis.push_back(vec_to_chainpoly(row, spec->N));
        Mat bf = dual_bf_span(F, basis, spec->N);
        Mat formula = code_span(dual_code(C));
        CHECK(bf == formula);
    }
}

TEST_CASE("verify_instance passes on healthy codes and reports JSONL") {
    auto spec = make_spec(2, 1, 1, 1, ChainElem{1, 1, 0});
    CodeDescriptor C = make_code(spec, {chain_ideal(2)});
    OracleReport rep = verify_instance(C);
    CHECK(rep.all_pass());
    CHECK(!rep.checks.empty());

    std::istringstream lines(rep.to_jsonl());
    std::string line;
    size_t parsed = 0;
    while (std::getline(lines, line)) {
        auto obj = nlohmann::json::parse(line);
        CHECK(obj.contains("check"));
        CHECK(obj.contains("expected"));
        CHECK(obj.contains("actual"));
        CHECK(obj["pass"].is_boolean());
        ++parsed;
    }
    CHECK(parsed == rep.checks.size());
}

TEST_CASE("verify_instance flags a corrupted ideal description") {
    auto spec = make_spec(2, 1, 1, 2, ChainElem{1, 0, 0});  // ps = 4
    // unit exponent t pushed below its floor c + b - p^s = 2
    IdealSpec bad = type2_ideal(3, 3, 0, Poly::constant(1), 4);
    CodeDescriptor C = make_code(spec, {bad});
    OracleReport rep = verify_instance(C);
    CHECK_FALSE(rep.all_pass());
}

TEST_CASE("verify_instance across all single-component cyclic codes") {
    auto spec = make_spec(3, 1, 1, 1, ChainElem{1, 0, 0});
    for (const IdealSpec& I : enumerate_ideals(spec->components[0])) {
        OracleReport rep = verify_instance(make_code(spec, {I}));
        CHECK(rep.all_pass());
    }
}
