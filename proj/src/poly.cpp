#include "modlie/poly.hpp"

#include <algorithm>
#include <map>

namespace modlie {

Poly Poly::monic() const {
    if (is_zero() || lead() == 1) return *this;
    return scaled(f_.inv(lead()));
}

unsigned Poly::eval(unsigned x) const {
    unsigned r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = f_.add(f_.mul(r, x), c_[i]);
    return r;
}

FpMatrix Poly::eval(const FpMatrix& m) const {
    if (m.rows() != m.cols()) throw std::invalid_argument("Poly::eval: matrix not square");
    FpMatrix r(m.rows(), m.rows(), f_.p);
    for (size_t i = c_.size(); i-- > 0;) {
        r = r.mul(m);
        for (size_t d = 0; d < m.rows(); ++d) r.at(d, d) = f_.add(r.at(d, d), c_[i]);
    }
    return r;
}

Poly Poly::add(const Poly& o) const {
    Vec r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = f_.add(coeff(i), o.coeff(i));
    return Poly(std::move(r), f_.p);
}

Poly Poly::sub(const Poly& o) const {
    Vec r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = f_.sub(coeff(i), o.coeff(i));
    return Poly(std::move(r), f_.p);
}

Poly Poly::mul(const Poly& o) const {
    if (is_zero() || o.is_zero()) return zero(f_.p);
    Vec r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = f_.add(r[i + j], f_.mul(c_[i], o.c_[j]));
    }
    return Poly(std::move(r), f_.p);
}

Poly Poly::scaled(unsigned c) const {
    Vec r = c_;
    for (auto& x : r) x = f_.mul(c, x);
    return Poly(std::move(r), f_.p);
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw std::invalid_argument("Poly::divmod: division by zero");
    Vec rem = c_;
    Vec quo;
    unsigned dl_inv = f_.inv(d.lead());
    int dd = d.degree();
    if (degree() >= dd) quo.assign(degree() - dd + 1, 0);
    for (int i = degree(); i >= dd; --i) {
        unsigned c = rem[i];
        if (!c) continue;
        unsigned q = f_.mul(c, dl_inv);
        quo[i - dd] = q;
        for (int j = 0; j <= dd; ++j)
            rem[i - dd + j] = f_.sub(rem[i - dd + j], f_.mul(q, d.c_[j]));
    }
    return {Poly(std::move(quo), f_.p), Poly(std::move(rem), f_.p)};
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return zero(f_.p);
    Vec r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = f_.mul(static_cast<unsigned>(i % f_.p), c_[i]);
    return Poly(std::move(r), f_.p);
}

bool Poly::operator<(const Poly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    for (size_t i = c_.size(); i-- > 0;)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly powmod(const Poly& a, std::uint64_t e, const Poly& m) {
    Poly r = Poly::one(a.modulus());
    Poly base = a.mod(m);
    while (e) {
        if (e & 1) r = r.mul(base).mod(m);
        base = base.mul(base).mod(m);
        e >>= 1;
    }
    return r;
}

Poly charpoly(const FpMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("charpoly: matrix not square");
    const unsigned p = m.modulus();
    const Fp f(p);
    const size_t n = m.rows();
    if (n == 0) return Poly::one(p);

    // Similarity reduction to upper Hessenberg form.
    FpMatrix h = m;
    for (size_t c = 0; c + 2 <= n; ++c) {
        size_t piv = 0;
        for (size_t r = c + 1; r < n; ++r)
            if (h.at(r, c)) { piv = r; break; }
        if (piv == 0) continue;  // column already clear below the subdiagonal
        if (piv != c + 1) {
            for (size_t j = 0; j < n; ++j) std::swap(h.at(piv, j), h.at(c + 1, j));
            for (size_t i = 0; i < n; ++i) std::swap(h.at(i, piv), h.at(i, c + 1));
        }
        unsigned inv = f.inv(h.at(c + 1, c));
        for (size_t r = c + 2; r < n; ++r) {
            unsigned factor = f.mul(h.at(r, c), inv);
            if (!factor) continue;
            // Row op R_r -= factor*R_{c+1}, then the inverse column op
            // C_{c+1} += factor*C_r keeps the conjugacy class.
            for (size_t j = 0; j < n; ++j)
                h.at(r, j) = f.sub(h.at(r, j), f.mul(factor, h.at(c + 1, j)));
            for (size_t i = 0; i < n; ++i)
                h.at(i, c + 1) = f.add(h.at(i, c + 1), f.mul(factor, h.at(i, r)));
        }
    }

    // charpoly of the leading k x k minor of a Hessenberg matrix satisfies
    // p_k(x) = (x - h_kk) p_{k-1}(x) - sum_{i<k} h_ik (prod subdiag) p_{i-1}(x).
    std::vector<Poly> ps;
    ps.push_back(Poly::one(p));
    for (size_t k = 1; k <= n; ++k) {
        Poly xk = Poly(Vec{f.neg(h.at(k - 1, k - 1)), 1}, p);
        Poly acc = xk.mul(ps[k - 1]);
        unsigned beta = 1;
        for (size_t i = k - 1; i-- > 0;) {
            beta = f.mul(beta, h.at(i + 1, i));
            if (!beta) break;
            unsigned coef = f.mul(beta, h.at(i, k - 1));
            if (coef) acc = acc.sub(ps[i].scaled(coef));
        }
        ps.push_back(std::move(acc));
    }
    return ps[n];
}

namespace {

// p-th root of a polynomial all of whose exponents are multiples of p;
// coefficients of F_p are their own p-th roots.
Poly pth_root(const Poly& f) {
    const unsigned p = f.modulus();
    Vec r(f.coeffs().size() / p + 1, 0);
    for (size_t i = 0; i * p < f.coeffs().size() || i == 0; ++i) r[i] = f.coeff(i * p);
    return Poly(std::move(r), p);
}

// Squarefree part decomposition: returns (g, multiplicity) pairs with g
// squarefree (not yet irreducible), multiplicities exact.
void squarefree(const Poly& f, unsigned mult, std::map<unsigned, Poly>& out) {
    const unsigned p = f.modulus();
    if (f.degree() <= 0) return;
    Poly d = f.derivative();
    if (d.is_zero()) {  // f is a p-th power
        squarefree(pth_root(f), mult * p, out);
        return;
    }
    Poly g = gcd(f, d);
    Poly w = f.div(g).monic();  // product of factors with mult not divisible by p... peel them
    unsigned i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, g);
        Poly fac = w.div(y).monic();
        if (fac.degree() > 0) {
            auto it = out.find(mult * i);
            if (it == out.end())
                out.emplace(mult * i, fac);
            else
                it->second = it->second.mul(fac);
        }
        w = std::move(y);
        g = g.div(w).monic();
        ++i;
    }
    if (g.degree() > 0) squarefree(g, mult, out);  // remaining part is a p-th power times units
}

// Cantor-Zassenhaus equal-degree splitting: f squarefree, all irreducible
// factors of degree d.
void equal_degree(const Poly& f, unsigned d, SplitMix64& rng, std::vector<Poly>& out) {
    const unsigned p = f.modulus();
    if (f.degree() == static_cast<int>(d)) {
        out.push_back(f.monic());
        return;
    }
    const int n = f.degree();
    Poly splitter = Poly::zero(p);
    while (true) {
        Vec rc(static_cast<size_t>(n), 0);
        for (auto& c : rc) c = static_cast<unsigned>(rng.next_below(p));
        Poly r(std::move(rc), p);
        if (r.degree() < 1) continue;
        Poly g = gcd(r, f);
        if (g.degree() > 0 && g.degree() < n) { splitter = g; break; }
        Poly h = Poly::zero(p);
        if (p == 2) {
            // Trace map T(r) = r + r^2 + r^4 + ... over F_2^d.
            Poly t = r.mod(f);
            Poly acc = t;
            for (unsigned i = 1; i < d; ++i) {
                t = t.mul(t).mod(f);
                acc = acc.add(t);
            }
            h = std::move(acc);
        } else {
            // r^((p^d-1)/2) = (r^(1+p+...+p^(d-1)))^((p-1)/2); the norm chain
            // sidesteps computing p^d, which can overflow 64 bits.
            Poly t = r.mod(f);
            for (unsigned i = 1; i < d; ++i) t = powmod(t, p, f).mul(r).mod(f);
            h = powmod(t, (p - 1) / 2, f).sub(Poly::one(p));
        }
        Poly g2 = gcd(h, f);
        if (g2.degree() > 0 && g2.degree() < n) { splitter = g2; break; }
    }
    equal_degree(splitter, d, rng, out);
    equal_degree(f.div(splitter).monic(), d, rng, out);
}

}  // namespace

std::vector<std::pair<Poly, unsigned>> factor(const Poly& f, SplitMix64& rng) {
    if (f.is_zero()) throw std::invalid_argument("factor: zero polynomial");
    const unsigned p = f.modulus();
    std::map<unsigned, Poly> sqf;
    squarefree(f.monic(), 1, sqf);
    std::vector<std::pair<Poly, unsigned>> result;
    for (auto& [mult, part] : sqf) {
        // Distinct-degree: peel gcd(x^{p^d} - x, part) for d = 1, 2, ...
        Poly rest = part.monic();
        Poly xq = Poly::x(p);
        unsigned d = 0;
        while (rest.degree() > 0) {
            ++d;
            if (2 * static_cast<int>(d) > rest.degree()) {
                // Remainder is a single irreducible factor.
                std::vector<Poly> irr{rest.monic()};
                for (auto& g : irr) result.emplace_back(g, mult);
                break;
            }
            xq = powmod(xq, p, rest);
            Poly g = gcd(xq.sub(Poly::x(p)), rest);
            if (g.degree() > 0) {
                std::vector<Poly> irr;
                equal_degree(g, d, rng, irr);
                for (auto& gi : irr) result.emplace_back(gi, mult);
                rest = rest.div(g).monic();
                xq = xq.mod(rest);
            }
        }
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    return result;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    SplitMix64 rng(0x1234abcdull);
    auto fac = factor(f, rng);
    return fac.size() == 1 && fac[0].second == 1;
}

}  // namespace modlie
