#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace modlie {

// Arithmetic in the prime field F_p.  Elements are canonical residues in
// [0, p).  The modulus is kept small (p < 2^16) so products fit comfortably
// in 64 bits and repeated-squaring never overflows.
struct Fp {
    unsigned p;

    explicit Fp(unsigned p_) : p(p_) {
        if (p_ < 2 || p_ >= 65536 || !is_prime(p_))
            throw std::invalid_argument("Fp: modulus must be a prime < 65536");
    }

    static bool is_prime(unsigned n) {
        if (n < 2) return false;
        for (unsigned d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    unsigned add(unsigned a, unsigned b) const {
        unsigned s = a + b;
        return s >= p ? s - p : s;
    }
    unsigned sub(unsigned a, unsigned b) const { return a >= b ? a - b : a + p - b; }
    unsigned neg(unsigned a) const { return a == 0 ? 0 : p - a; }
    unsigned mul(unsigned a, unsigned b) const {
        return static_cast<unsigned>(static_cast<std::uint64_t>(a) * b % p);
    }
    unsigned pow(unsigned a, std::uint64_t e) const {
        unsigned r = 1 % p, base = a % p;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    unsigned inv(unsigned a) const {
        if (a % p == 0) throw std::invalid_argument("Fp::inv: zero is not invertible");
        return pow(a, p - 2);
    }
    // x -> x^p, the field's own Frobenius (identity on F_p, by Fermat).
    unsigned frob(unsigned a) const { return pow(a, p); }
    unsigned reduce(long long v) const {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += p;
        return static_cast<unsigned>(r);
    }
};

using Vec = std::vector<unsigned>;

inline Vec vec_add(const Fp& f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: length mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
    return r;
}

inline Vec vec_sub(const Fp& f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: length mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
    return r;
}

inline Vec vec_scale(const Fp& f, unsigned c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
    return r;
}

inline bool vec_is_zero(const Vec& a) {
    for (unsigned x : a)
        if (x) return false;
    return true;
}

inline Vec unit_vec(size_t n, size_t i) {
    Vec r(n, 0);
    r[i] = 1;
    return r;
}

}  // namespace modlie
