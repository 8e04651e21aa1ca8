#include "chaincodes/serialize.hpp"

#include <sstream>

namespace chaincodes {

Json field_to_json(const Field& F) {
    return {{"p", F.p()}, {"m", F.m()}, {"modulus", F.modulus()}};
}

Json poly_to_json(const Field& F, const Poly& a) {
    Json arr = Json::array();
    for (uint32_t c : a.c) arr.push_back(F.digits(c));
    return arr;
}

Json chainpoly_to_json(const Field& F, const ChainPoly& a) {
    return {{"a0", poly_to_json(F, a.a0)},
            {"a1", poly_to_json(F, a.a1)},
            {"a2", poly_to_json(F, a.a2)}};
}

Json spec_to_json(const ConstacyclicSpec& spec) {
    const Field& F = *spec.field;
    Json factors = Json::array();
    for (const FactorData& fd : spec.factors) {
        factors.push_back({{"f", poly_to_json(F, fd.f)},
                           {"g", poly_to_json(F, fd.g)},
                           {"h", poly_to_json(F, fd.h)},
                           {"v", poly_to_json(F, fd.v)},
                           {"w", poly_to_json(F, fd.w)}});
    }
    return {{"p", F.p()},
            {"m", F.m()},
            {"n", spec.n},
            {"s", spec.s},
            {"lambda", {spec.lambda.a0, spec.lambda.a1, spec.lambda.a2}},
            {"alpha0", spec.alpha0},
            {"factors", factors}};
}

std::string kind_name(IdealKind kind) {
    switch (kind) {
        case IdealKind::Zero: return "Zero";
        case IdealKind::Unit: return "Unit";
        case IdealKind::Chain: return "Chain";
        case IdealKind::TypeI: return "TypeI";
        case IdealKind::TypeII: return "TypeII";
        case IdealKind::TypeIII: return "TypeIII";
    }
    return "?";
}

Json ideal_spec_to_json(const Field& F, const IdealSpec& spec) {
    Json params = Json::object();
    Json units = Json::object();
    switch (spec.kind) {
        case IdealKind::Zero:
        case IdealKind::Unit:
            break;
        case IdealKind::Chain:
            params["ell"] = spec.ell;
            break;
        case IdealKind::TypeI:
            params["c"] = spec.c;
            break;
        case IdealKind::TypeII:
            params["b"] = spec.b;
            params["c"] = spec.c;
            params["t"] = spec.t;
            units["G"] = poly_to_json(F, spec.G);
            break;
        case IdealKind::TypeIII:
            params["a"] = spec.a;
            params["b"] = spec.b;
            params["c"] = spec.c;
            params["t1"] = spec.t1;
            params["t2"] = spec.t2;
            params["theta"] = spec.theta;
            units["D1"] = poly_to_json(F, spec.D1);
            units["D2"] = poly_to_json(F, spec.D2);
            units["V"] = poly_to_json(F, spec.V);
            break;
    }
    return {{"kind", kind_name(spec.kind)}, {"params", params}, {"units", units}};
}

std::string codewords_to_csv(const std::vector<ChainPoly>& words, size_t N) {
    std::ostringstream os;
    for (const ChainPoly& w : words) {
        Vec v = chainpoly_to_vec(w, N);
        for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        os << "\n";
    }
    return os.str();
}

std::string weight_distribution_to_csv(const WeightDistribution& wd) {
    std::ostringstream os;
    for (size_t rho = 0; rho < wd.A.size(); ++rho) os << rho << "," << wd.A[rho].str() << "\n";
    return os.str();
}

}  // namespace chaincodes
