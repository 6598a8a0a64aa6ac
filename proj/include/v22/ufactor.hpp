#pragma once

#include <string>
#include <utility>
#include <vector>

#include "upoly.hpp"

namespace v22 {

// Rational roots of a nonzero polynomial, found by the rational-root theorem
// on the primitive integer form. Divisor enumeration is capped, which is fine
// for the small constants that occur here; roots beyond the cap stay in the
// unfactored remainder.
inline std::vector<Rat> rational_roots(const UPoly& p0) {
    std::vector<Rat> roots;
    if (p0.is_zero()) throw DomainError("rational_roots of zero polynomial");
    UPoly p = primitive(p0);
    while (!p.is_zero() && v22::is_zero(p.coeff(0))) {
        roots.push_back(Rat(0));
        p.c.erase(p.c.begin());
    }
    if (p.degree() < 1) return roots;

    auto divisors = [](const mpz_class& n0) {
        mpz_class n = abs(n0);
        std::vector<mpz_class> divs;
        const size_t cap = 4096;
        mpz_class i(1);
        while (i * i <= n && divs.size() < cap) {
            if (n % i == 0) {
                divs.push_back(i);
                if (i * i != n) divs.push_back(n / i);
            }
            // bail out on huge constants; trial roots stay best-effort
            if (i > 2000000) break;
            ++i;
        }
        return divs;
    };

    mpz_class a0(p.coeff(0).get_num());
    mpz_class an(p.lead().get_num());
    auto ps = divisors(a0), qs = divisors(an);
    for (const auto& num : ps)
        for (const auto& den : qs)
            for (int s : {1, -1}) {
                Rat cand(s * num, den);
                cand.canonicalize();
                while (p.degree() >= 1 && v22::is_zero(p.eval(cand))) {
                    roots.push_back(cand);
                    UPoly lin(std::vector<Rat>{-cand, Rat(1)});
                    p = divmod(p, lin).first;
                }
            }
    return roots;
}

struct UFactor {
    UPoly factor;
    int multiplicity;
};

struct UFactorization {
    Rat constant{1};
    std::vector<UFactor> factors;   // primitive, degree <= 2, irreducible over Q
    UPoly remainder = UPoly::one(); // monic; no rational roots found by the method
};

// Square-free factorization over Q followed by extraction of linear factors
// (rational roots) and of the full square-free part when it has degree <= 2.
// Deliberately weak beyond degree 2.
inline UFactorization factor_square_free_in_u(const UPoly& p) {
    if (p.is_zero()) throw DomainError("factor_square_free_in_u of zero polynomial");
    UFactorization out;

    // constant * monic
    UPoly m = monic(p);
    out.constant = p.lead();

    // square-free chain: p = prod s_i^i
    std::vector<UPoly> sqf;  // sqf[i] = square-free part with multiplicity i+1
    UPoly a = m;
    while (a.degree() > 0) {
        UPoly g = gcd(a, a.derivative());
        UPoly s = divmod(a, g).first;  // product of distinct prime factors of a
        sqf.push_back(s);
        a = g;
    }
    // convert chain to s_i of exact multiplicity i
    // sqf[i] = prod_{j>=i+1} (prime factors with multiplicity j)
    std::vector<UPoly> exact;
    for (size_t i = 0; i < sqf.size(); ++i) {
        UPoly next = (i + 1 < sqf.size()) ? sqf[i + 1] : UPoly::one();
        exact.push_back(divmod(sqf[i], next).first);
    }

    for (size_t i = 0; i < exact.size(); ++i) {
        UPoly s = exact[i];
        int mult = static_cast<int>(i) + 1;
        if (s.degree() < 1) continue;
        for (const Rat& r : rational_roots(s)) {
            UPoly lin(std::vector<Rat>{-r, Rat(1)});
            out.factors.push_back({primitive(lin), mult});
            s = divmod(s, lin).first;
        }
        if (s.degree() >= 1 && s.degree() <= 2) {
            out.factors.push_back({primitive(s), mult});
        } else if (s.degree() > 2) {
            for (int k = 0; k < mult; ++k) out.remainder = out.remainder * s;
        }
    }
    out.remainder = monic(out.remainder);

    // self-check: product reproduces p up to the constant
    UPoly prod = out.remainder * out.constant;
    for (const auto& [f, k] : out.factors)
        for (int j = 0; j < k; ++j) prod = prod * f;
    if (!(monic(prod) == monic(p)))
        throw DomainError("factor_square_free_in_u: internal product check failed");
    out.constant = p.lead() / prod.lead() * out.constant;
    return out;
}

// Strip u^a * (u-1)^b: the exceptional parameter values excluded throughout.
inline UPoly admissible_locus(UPoly p) {
    if (p.is_zero()) return p;
    UPoly u_lin(std::vector<Rat>{Rat(0), Rat(1)});
    UPoly u_minus_1(std::vector<Rat>{Rat(-1), Rat(1)});
    for (;;) {
        auto [q, r] = divmod(p, u_lin);
        if (!r.is_zero()) break;
        p = q;
    }
    for (;;) {
        auto [q, r] = divmod(p, u_minus_1);
        if (!r.is_zero()) break;
        p = q;
    }
    return monic(p);
}

// True iff the vanishing locus of res, away from u in {0,1}, is exactly the
// root set of `claimed`, i.e. res = c * u^a * (u-1)^b * claimed^k with k >= 1
// (k = 0 allowed only for constant `claimed`).
inline bool locus_equals(const UPoly& res, const UPoly& claimed) {
    if (res.is_zero()) return false;
    UPoly rest = admissible_locus(res);
    if (claimed.degree() < 1) return rest.degree() == 0;
    int k = 0;
    for (;;) {
        auto [q, r] = divmod(rest, claimed);
        if (!r.is_zero()) break;
        rest = q;
        ++k;
    }
    return k >= 1 && admissible_locus(rest).degree() == 0;
}

inline std::string to_string(const UFactorization& f) {
    std::string out = v22::to_string(f.constant);
    for (const auto& [fac, k] : f.factors) {
        out += " * (" + to_string(fac) + ")";
        if (k > 1) out += "^" + std::to_string(k);
    }
    if (!(f.remainder == UPoly::one())) out += " * [" + to_string(f.remainder) + "]";
    return out;
}

}  // namespace v22
