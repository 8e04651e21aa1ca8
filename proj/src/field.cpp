#include "chaincodes/field.hpp"

#include <algorithm>
#include <numeric>

namespace chaincodes {

namespace {

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// polynomial arithmetic over F_p on raw digit vectors, used only during
// construction (modulus search); everything else goes through the tables
using FpPoly = std::vector<uint32_t>;

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + uint64_t(a[i]) * b[j]) % p;
    fp_trim(c);
    return c;
}

// a mod f, f monic
FpPoly fp_mod(FpPoly a, const FpPoly& f, uint32_t p) {
    fp_trim(a);
    while (a.size() >= f.size()) {
        uint32_t lead = a.back();
        size_t shift = a.size() - f.size();
        for (size_t i = 0; i < f.size(); ++i) {
            uint64_t sub = uint64_t(lead) * f[i] % p;
            a[shift + i] = uint32_t((a[shift + i] + p - sub) % p);
        }
        fp_trim(a);
    }
    return a;
}

FpPoly fp_powmod_x(uint64_t e, const FpPoly& f, uint32_t p) {
    // x^e mod f by square and multiply
    FpPoly result{1};
    FpPoly base{0, 1};
    base = fp_mod(base, f, p);
    while (e > 0) {
        if (e & 1) result = fp_mod(fp_mul(result, base, p), f, p);
        base = fp_mod(fp_mul(base, base, p), f, p);
        e >>= 1;
    }
    return result;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, uint32_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        // make b monic for fp_mod
        uint32_t lc = b.back();
        if (lc != 1) {
            // lc^{-1} via Fermat
            uint64_t inv = 1, base = lc, e = p - 2;
            while (e) {
                if (e & 1) inv = inv * base % p;
                base = base * base % p;
                e >>= 1;
            }
            for (auto& c : b) c = uint32_t(c * inv % p);
        }
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// irreducibility of monic f of degree m over F_p:
// x^{p^m} == x mod f, and gcd(x^{p^{m/t}} - x, f) = 1 for prime t | m
bool fp_irreducible(const FpPoly& f, uint32_t p) {
    size_t m = f.size() - 1;
    if (m == 0) return false;
    uint64_t pm = 1;
    for (size_t i = 0; i < m; ++i) pm *= p;
    FpPoly xq = fp_powmod_x(pm, f, p);
    FpPoly x{0, 1};
    x = fp_mod(x, f, p);
    if (xq != x) return false;
    for (uint32_t t = 2; t <= m; ++t) {
        if (m % t != 0) continue;
        bool t_prime = is_prime(t);
        if (!t_prime) continue;
        uint64_t e = 1;
        for (size_t i = 0; i < m / t; ++i) e *= p;
        FpPoly g = fp_powmod_x(e, f, p);
        // g - x
        FpPoly diff = g;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        fp_trim(diff);
        FpPoly d = fp_gcd(f, diff, p);
        if (d.size() != 1) return false;
    }
    return true;
}

}  // namespace

Field::Field(uint32_t p, uint32_t m) : p_(p), m_(m) {
    if (!is_prime(p)) throw NonPrimeError("p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw DegreeZeroError("m must be >= 1");
    q_ = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q_ *= p;
        if (q_ > (1u << 20)) throw RangeError("p^m exceeds supported field size");
    }
    if (m == 1) {
        modulus_ = {0, 1};  // x; unused for the prime field
    } else {
        // first monic irreducible of degree m, coefficient vectors
        // (c_0,...,c_{m-1}) in ascending lexicographic order
        std::vector<uint32_t> c(m, 0);
        bool found = false;
        while (!found) {
            FpPoly f(c.begin(), c.end());
            f.push_back(1);
            if (fp_irreducible(f, p)) {
                modulus_.assign(f.begin(), f.end());
                found = true;
                break;
            }
            // lex successor: c_0 is the most significant position
            int i = int(m) - 1;
            while (i >= 0 && c[i] == p - 1) c[i--] = 0;
            if (i < 0) break;
            ++c[i];
        }
        if (!found) throw Error("no irreducible modulus found");  // unreachable
    }
    if (q_ <= 1024) {
        add_table_.resize(q_ * q_);
        mul_table_.resize(q_ * q_);
        inv_table_.assign(q_, 0);
        for (uint64_t a = 0; a < q_; ++a)
            for (uint64_t b = 0; b < q_; ++b) {
                // add digitwise
                uint64_t s = 0, pw = 1, aa = a, bb = b;
                for (uint32_t i = 0; i < m_; ++i) {
                    s += (aa % p_ + bb % p_) % p_ * pw;
                    aa /= p_;
                    bb /= p_;
                    pw *= p_;
                }
                add_table_[a * q_ + b] = uint32_t(s);
                mul_table_[a * q_ + b] = mul_slow(uint32_t(a), uint32_t(b));
            }
        for (uint64_t a = 1; a < q_; ++a)
            for (uint64_t b = 1; b < q_; ++b)
                if (mul_table_[a * q_ + b] == 1) inv_table_[a] = uint32_t(b);
    }
}

uint32_t Field::mul_slow(uint32_t a, uint32_t b) const {
    if (m_ == 1) return uint32_t(uint64_t(a) * b % p_);
    // digit vectors
    std::vector<uint32_t> da(m_), db(m_);
    uint32_t aa = a, bb = b;
    for (uint32_t i = 0; i < m_; ++i) {
        da[i] = aa % p_;
        aa /= p_;
        db[i] = bb % p_;
        bb /= p_;
    }
    std::vector<uint32_t> c(2 * m_ - 1, 0);
    for (uint32_t i = 0; i < m_; ++i)
        for (uint32_t j = 0; j < m_; ++j) c[i + j] = uint32_t((c[i + j] + uint64_t(da[i]) * db[j]) % p_);
    // reduce mod modulus (monic of degree m)
    for (int k = int(c.size()) - 1; k >= int(m_); --k) {
        uint32_t lead = c[k];
        if (lead == 0) continue;
        c[k] = 0;
        for (uint32_t i = 0; i < m_; ++i) {
            uint64_t sub = uint64_t(lead) * modulus_[i] % p_;
            c[k - m_ + i] = uint32_t((c[k - m_ + i] + p_ - sub) % p_);
        }
    }
    uint64_t r = 0, pw = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        r += c[i] * pw;
        pw *= p_;
    }
    return uint32_t(r);
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
    if (!add_table_.empty()) return add_table_[uint64_t(a) * q_ + b];
    uint64_t s = 0, pw = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        s += (a % p_ + b % p_) % p_ * pw;
        a /= p_;
        b /= p_;
        pw *= p_;
    }
    return uint32_t(s);
}

uint32_t Field::neg(uint32_t a) const {
    uint64_t s = 0, pw = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        s += (p_ - a % p_) % p_ * pw;
        a /= p_;
        pw *= p_;
    }
    return uint32_t(s);
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    if (!mul_table_.empty()) return mul_table_[uint64_t(a) * q_ + b];
    return mul_slow(a, b);
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0) throw ZeroInputError("inverse of zero");
    if (!inv_table_.empty()) return inv_table_[a];
    return pow(a, q_ - 2);
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

uint32_t Field::digit(uint32_t a, uint32_t i) const {
    for (uint32_t k = 0; k < i; ++k) a /= p_;
    return a % p_;
}

uint32_t Field::from_digits(const std::vector<uint32_t>& digits) const {
    uint64_t v = 0, pw = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t d = i < digits.size() ? digits[i] % p_ : 0;
        v += d * pw;
        pw *= p_;
    }
    return uint32_t(v);
}

std::vector<uint32_t> Field::digits(uint32_t a) const {
    std::vector<uint32_t> d(m_);
    for (uint32_t i = 0; i < m_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

uint32_t Field::from_int(int64_t v) const {
    int64_t r = v % int64_t(p_);
    if (r < 0) r += p_;
    return uint32_t(r);
}

uint64_t Field::mult_order(uint32_t a) const {
    if (a == 0) throw ZeroInputError("mult_order of zero");
    uint64_t n = q_ - 1;
    // order divides q-1: strip prime factors while the power stays 1
    uint64_t e = n;
    uint64_t rem = n;
    for (uint64_t d = 2; d * d <= rem; ++d) {
        while (rem % d == 0) {
            rem /= d;
            while (e % d == 0 && pow(a, e / d) == 1) e /= d;
        }
    }
    if (rem > 1)
        while (e % rem == 0 && pow(a, e / rem) == 1) e /= rem;
    return e;
}

uint32_t Field::ps_root(uint32_t a, uint32_t s) const {
    if (a == 0) throw ZeroInputError("ps_root of zero");
    uint64_t n = q_ - 1;
    if (n == 1) return a;
    // t = (p^s)^{-1} mod (q-1); gcd(p, q-1) = 1
    uint64_t ps = 1;
    for (uint32_t i = 0; i < s; ++i) ps = ps * p_ % n;
    // extended euclid
    int64_t r0 = int64_t(n), r1 = int64_t(ps), t0 = 0, t1 = 1;
    while (r1 != 0) {
        int64_t qq = r0 / r1;
        int64_t r2 = r0 - qq * r1;
        int64_t t2 = t0 - qq * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) throw Error("p^s not invertible mod q-1");  // unreachable
    int64_t t = t0 % int64_t(n);
    if (t < 0) t += n;
    return pow(a, uint64_t(t));
}

}  // namespace chaincodes
