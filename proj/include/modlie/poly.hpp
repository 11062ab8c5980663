#pragma once

#include <utility>
#include <vector>

#include "modlie/matrix.hpp"
#include "modlie/rng.hpp"

namespace modlie {

// Dense univariate polynomial over F_p, coefficients low degree first,
// invariant: no trailing zeros (the zero polynomial has empty coeffs).
class Poly {
  public:
    Poly(Vec coeffs, unsigned p) : f_(p), c_(std::move(coeffs)) {
        for (auto& x : c_) x %= p;
        trim();
    }
    static Poly zero(unsigned p) { return Poly(Vec{}, p); }
    static Poly one(unsigned p) { return Poly(Vec{1}, p); }
    static Poly x(unsigned p) { return Poly(Vec{0, 1}, p); }

    unsigned modulus() const { return f_.p; }
    const Vec& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    unsigned coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    unsigned lead() const { return c_.empty() ? 0 : c_.back(); }

    bool is_monic() const { return lead() == 1; }
    Poly monic() const;

    unsigned eval(unsigned x) const;
    FpMatrix eval(const FpMatrix& m) const;  // p(M), square M

    Poly add(const Poly& o) const;
    Poly sub(const Poly& o) const;
    Poly mul(const Poly& o) const;
    Poly scaled(unsigned c) const;
    // Division with remainder by a nonzero divisor.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly mod(const Poly& d) const { return divmod(d).second; }
    Poly div(const Poly& d) const { return divmod(d).first; }
    Poly derivative() const;

    bool operator==(const Poly& o) const { return f_.p == o.f_.p && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    // Ordering by (degree, reversed coefficient list); used to emit factor
    // lists in a canonical order.
    bool operator<(const Poly& o) const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    Fp f_;
    Vec c_;
};

Poly gcd(Poly a, Poly b);
// a^e mod m by repeated squaring.
Poly powmod(const Poly& a, std::uint64_t e, const Poly& m);

// Characteristic polynomial det(xI - M), monic of degree n.  Computed via
// similarity reduction to Hessenberg form followed by the leading-minor
// recurrence, O(n^3).
Poly charpoly(const FpMatrix& m);

// Monic irreducible factors with multiplicities, sorted canonically.
// Squarefree decomposition (with p-th root extraction for vanishing
// derivative), distinct-degree splitting, then Cantor-Zassenhaus
// equal-degree splitting driven by the supplied generator.
std::vector<std::pair<Poly, unsigned>> factor(const Poly& f, SplitMix64& rng);

bool is_irreducible(const Poly& f);

}  // namespace modlie
